//! Finite ⟨s⟩-submodules of the diagonal group: labels, generators, t-action, N-arrays.

use crate::arith::{factorize, gcd, is_prime, least_primitive_root, pow_mod};
use crate::error::{Error, Result};
use crate::monomial::{DiagExponents, Permutation};
use crate::padic::{build_factor_system, order_data};
use std::fmt;
use std::str::FromStr;

/// Parameters `(j, k, l)` of the p-part `Y_{j,k,l}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct YLabel {
    pub j: u32,
    pub k: u32,
    pub l: u32,
}

impl YLabel {
    pub fn new(j: u32, k: u32, l: u32) -> Self {
        Self { j, k, l }
    }

    pub fn is_valid(&self, p: u64) -> bool {
        (self.j == 0 && self.l == 0) || (self.j >= 1 && self.k >= 1 && (self.l as u64) < p)
    }

    pub fn is_trivial(&self) -> bool {
        self.j == 0 && self.k == 0 && self.l == 0
    }
}

/// Parameters `(n₁, …, n_v; c)` of the q-part `X^{(1)}_{q,n₁}⋯X^{(v)}_{q,n_v} Z_{q^c}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WLabel {
    pub q: u64,
    pub ns: Vec<u32>,
    pub c: u32,
}

impl WLabel {
    pub fn is_trivial(&self) -> bool {
        self.c == 0 && self.ns.iter().all(|&n| n == 0)
    }

    pub fn is_scalar(&self) -> bool {
        self.ns.iter().all(|&n| n == 0)
    }

    /// Exponent `e` with order `q^e`.
    pub fn order_exponent(&self, p: u64) -> u32 {
        let (d, _) = order_data(p, self.q);
        d as u32 * self.ns.iter().sum::<u32>() + self.c
    }
}

/// `Y × Π_q W_q`; `ws` holds the non-trivial q-parts in ascending `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleLabel {
    pub p: u64,
    pub y: YLabel,
    pub ws: Vec<WLabel>,
}

impl ModuleLabel {
    pub fn trivial(p: u64) -> Self {
        Self { p, y: YLabel::default(), ws: Vec::new() }
    }

    /// Validates and canonicalizes (drops trivial q-parts, sorts by `q`).
    pub fn new(p: u64, y: YLabel, mut ws: Vec<WLabel>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if !y.is_valid(p) {
            return Err(Error::InvalidLabel(format!("Y=({},{},{}) is not a valid p-part", y.j, y.k, y.l)));
        }
        ws.retain(|w| !w.is_trivial());
        ws.sort_by_key(|w| w.q);
        for pair in ws.windows(2) {
            if pair[0].q == pair[1].q {
                return Err(Error::InvalidLabel(format!("repeated prime {}", pair[0].q)));
            }
        }
        for w in &ws {
            if !is_prime(w.q) || w.q == p {
                return Err(Error::InvalidLabel(format!("bad prime {} for degree {p}", w.q)));
            }
            let (_, v) = order_data(p, w.q);
            if w.ns.len() as u64 != v {
                return Err(Error::InvalidLabel(format!("W[{}] needs {v} entries before c", w.q)));
            }
        }
        Ok(Self { p, y, ws })
    }

    pub fn w(&self, q: u64) -> Option<&WLabel> {
        self.ws.iter().find(|w| w.q == q)
    }

    /// `|A| = p^{j+k} Π q^{dΣn+c}`, or `None` on overflow.
    pub fn order(&self) -> Option<u64> {
        let mut o = self.p.checked_pow(self.y.j + self.y.k)?;
        for w in &self.ws {
            o = o.checked_mul(w.q.checked_pow(w.order_exponent(self.p))?)?;
        }
        Some(o)
    }

    /// True iff the module consists of scalars.
    pub fn is_scalar(&self) -> bool {
        self.y.j == 0 && self.y.l == 0 && self.ws.iter().all(WLabel::is_scalar)
    }

    /// True iff some q-part is non-scalar.
    pub fn w_nonscalar(&self) -> bool {
        self.ws.iter().any(|w| !w.is_scalar())
    }

    /// Exponent of `q` in the scalar part `A ∩ Z_{q}`.
    pub fn scalar_exponent(&self, q: u64) -> u32 {
        self.w(q).map_or(0, |w| w.c)
    }

    /// The q-part tuple `(n₁, …, n_v)`, all zero if absent.
    pub fn tuple(&self, q: u64) -> Vec<u32> {
        match self.w(q) {
            Some(w) => w.ns.clone(),
            None => vec![0; order_data(self.p, q).1 as usize],
        }
    }

    /// `m` with `A ∩ Z_{p′} = Z_m`.
    pub fn p_prime_scalar_order(&self) -> u64 {
        self.ws.iter().map(|w| w.q.pow(w.c)).product()
    }
}

impl fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={};Y={},{},{}", self.p, self.y.j, self.y.k, self.y.l)?;
        for w in &self.ws {
            write!(f, ";W[{}]=", w.q)?;
            for n in &w.ns {
                write!(f, "{n},")?;
            }
            write!(f, "{}", w.c)?;
        }
        Ok(())
    }
}

fn parse_num<T: FromStr>(tok: &str, whole: &str) -> Result<T> {
    tok.trim().parse().map_err(|_| Error::MalformedToken(whole.to_string()))
}

/// Parses module tokens (`p=…`, `Y=…`, `W[q]=…`).
pub fn parse_module_tokens<'a>(tokens: impl IntoIterator<Item = &'a str>) -> Result<ModuleLabel> {
    let mut p = None;
    let mut y = YLabel::default();
    let mut ws = Vec::new();
    for tok in tokens {
        let (key, val) = tok.split_once('=').ok_or_else(|| Error::MalformedToken(tok.to_string()))?;
        match key.trim() {
            "p" => p = Some(parse_num::<u64>(val, tok)?),
            "Y" => {
                let parts: Vec<u32> = val.split(',').map(|x| parse_num(x, tok)).collect::<Result<_>>()?;
                if parts.len() != 3 {
                    return Err(Error::MalformedToken(tok.to_string()));
                }
                y = YLabel::new(parts[0], parts[1], parts[2]);
            }
            k if k.starts_with("W[") && k.ends_with(']') => {
                let q = parse_num::<u64>(&k[2..k.len() - 1], tok)?;
                let mut parts: Vec<u32> = val.split(',').map(|x| parse_num(x, tok)).collect::<Result<_>>()?;
                let c = parts.pop().ok_or_else(|| Error::MalformedToken(tok.to_string()))?;
                ws.push(WLabel { q, ns: parts, c });
            }
            _ => return Err(Error::MalformedToken(tok.to_string())),
        }
    }
    let p = p.ok_or_else(|| Error::InvalidLabel("missing p".into()))?;
    ModuleLabel::new(p, y, ws)
}

impl FromStr for ModuleLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_module_tokens(s.split(';').filter(|t| !t.trim().is_empty()))
    }
}

/// `x_{p^j} = γ^m(b_{p^n})` where `j = n(p−1) − m`, `0 ≤ m < p−1`.
pub fn x_pj_generator(p: u64, j: u32, modulus: u64) -> Result<DiagExponents> {
    let (n, m) = x_pj_indices(p, j);
    let pn = p.pow(n);
    if !modulus.is_multiple_of(pn) {
        return Err(Error::ModulusMismatch { from: pn, to: modulus });
    }
    let mut d = DiagExponents::b(p as usize, pn, modulus)?;
    for _ in 0..m {
        d = d.gamma();
    }
    Ok(d)
}

/// `(n, m)` with `j = n(p−1) − m`, `0 ≤ m < p−1`.
pub fn x_pj_indices(p: u64, j: u32) -> (u32, u32) {
    let w = (p - 1) as u32;
    let n = j.div_ceil(w);
    (n, n * w - j)
}

/// Generators of `Y_{j,k,l}` as an ⟨s⟩-module.
pub fn y_generators(y: &YLabel, p: u64) -> Result<Vec<DiagExponents>> {
    if !y.is_valid(p) {
        return Err(Error::InvalidLabel(format!("Y=({},{},{})", y.j, y.k, y.l)));
    }
    let pu = p as usize;
    if y.j == 0 {
        return Ok(if y.k == 0 { Vec::new() } else { vec![DiagExponents::z(pu, p.pow(y.k), p.pow(y.k))?] });
    }
    let (n, _) = x_pj_indices(p, y.j + 1);
    let top = if y.l > 0 { n.max(y.k + 1) } else { n.max(y.k) };
    let modulus = p.pow(top);
    let x = x_pj_generator(p, y.j + 1, modulus)?;
    let mut first = x;
    if y.l > 0 {
        let z = DiagExponents::z(pu, p.pow(y.k + 1), modulus)?;
        first = first.add(&z.scale(y.l as i64));
    }
    Ok(vec![first, DiagExponents::z(pu, p.pow(y.k), modulus)?])
}

/// `x^{(r)}_{q,n} = b_{qⁿ}^{f_{r′,n}(s)}`, for `r` 1-based.
pub fn x_qr_generator(p: u64, q: u64, r: usize, n: u32) -> Result<DiagExponents> {
    let fs = build_factor_system(p, q, n)?;
    let qn = q.pow(n);
    let b = DiagExponents::b(p as usize, qn, qn)?;
    Ok(b.apply_group_ring(&fs.cofactors[r - 1].as_i64(), &Permutation::s(p as usize)))
}

/// Generators of a q-part: one per non-zero `n_r`, plus `z_{q^c}` when `c > 0`.
pub fn w_generators(w: &WLabel, p: u64) -> Result<Vec<DiagExponents>> {
    let mut out = Vec::new();
    for (r, &n) in w.ns.iter().enumerate() {
        if n > 0 {
            out.push(x_qr_generator(p, w.q, r + 1, n)?);
        }
    }
    if w.c > 0 {
        let qc = w.q.pow(w.c);
        out.push(DiagExponents::z(p as usize, qc, qc)?);
    }
    Ok(out)
}

/// All ⟨s⟩-module generators of a labelled module.
pub fn module_generators(label: &ModuleLabel) -> Result<Vec<DiagExponents>> {
    let mut out = y_generators(&label.y, label.p)?;
    for w in &label.ws {
        out.extend(w_generators(w, label.p)?);
    }
    Ok(out)
}

fn compositions(v: usize, total: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if v == 0 {
        if total == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    if v == 1 {
        prefix.push(total);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for x in 0..=total {
        prefix.push(x);
        compositions(v - 1, total - x, prefix, out);
        prefix.pop();
    }
}

/// All q-part labels of order `q^e`.
pub fn w_options(p: u64, q: u64, e: u32) -> Vec<WLabel> {
    let (d, v) = order_data(p, q);
    let mut out = Vec::new();
    for s in 0..=e / d as u32 {
        let c = e - d as u32 * s;
        let mut tuples = Vec::new();
        compositions(v as usize, s, &mut Vec::new(), &mut tuples);
        out.extend(tuples.into_iter().map(|ns| WLabel { q, ns, c }));
    }
    out.sort();
    out
}

/// All p-part labels of order `p^a`.
pub fn y_options(p: u64, a: u32) -> Vec<YLabel> {
    let mut out = vec![YLabel::new(0, a, 0)];
    for j in 1..a {
        for l in 0..p as u32 {
            out.push(YLabel::new(j, a - j, l));
        }
    }
    out.sort();
    out
}

/// All module labels of order `o`, in canonical sort order.
pub fn enumerate_modules(p: u64, o: u64) -> Vec<ModuleLabel> {
    if o == 0 {
        return Vec::new();
    }
    let fac = factorize(o);
    let a = fac.iter().find(|(q, _)| *q == p).map_or(0, |&(_, e)| e);
    let parts: Vec<Vec<WLabel>> = fac.iter().filter(|(q, _)| *q != p).map(|&(q, e)| w_options(p, q, e)).collect();
    let mut combos: Vec<Vec<WLabel>> = vec![Vec::new()];
    for opts in &parts {
        combos = combos
            .into_iter()
            .flat_map(|c| {
                opts.iter().map(move |w| {
                    let mut c2 = c.clone();
                    c2.push(w.clone());
                    c2
                })
            })
            .collect();
    }
    let mut out = Vec::new();
    for y in y_options(p, a) {
        for ws in &combos {
            out.push(ModuleLabel { p, y, ws: ws.clone() });
        }
    }
    out.sort();
    out
}

/// The label of `A^t`.
pub fn t_act(label: &ModuleLabel) -> ModuleLabel {
    let p = label.p;
    let u = least_primitive_root(p);
    let mut y = label.y;
    y.l = ((y.l as u64 * pow_mod(u, y.j as u64, p)) % p) as u32;
    let ws = label
        .ws
        .iter()
        .map(|w| {
            let mut ns = w.ns.clone();
            ns.rotate_right(1);
            WLabel { q: w.q, ns, c: w.c }
        })
        .collect();
    ModuleLabel { p, y, ws }
}

/// The set `{u, u², …, u^{j′}} mod p` with `j′ = gcd(j, p−1)`.
pub fn u_power_set(p: u64, j: u32) -> Vec<u32> {
    let jp = gcd(j as u64, p - 1);
    let u = least_primitive_root(p);
    let mut out: Vec<u32> = (1..=jp).map(|e| pow_mod(u, e, p) as u32).collect();
    out.sort_unstable();
    out
}

/// Rows of q-part tuples repeated periodically to `p−1` columns, ascending `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NArray {
    pub rows: Vec<(u64, Vec<u32>)>,
}

impl NArray {
    pub fn columns(&self) -> usize {
        self.rows.first().map_or(0, |(_, r)| r.len())
    }

    /// All rows shifted `k` places rightward modulo `p−1`.
    pub fn shift(&self, k: usize) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|(q, r)| {
                let mut r = r.clone();
                if !r.is_empty() {
                    let k = k % r.len();
                    r.rotate_right(k);
                }
                (*q, r)
            })
            .collect();
        Self { rows }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|(_, r)| r.iter().all(|&x| x == 0))
    }

    /// Fixed by the shift of `step` columns.
    pub fn is_shift_fixed(&self, step: usize) -> bool {
        self.shift(step) == *self
    }

    /// Lexicographically least within its orbit under shifts by multiples of `step`.
    pub fn is_shift_minimal(&self, step: usize) -> bool {
        let cols = self.columns();
        if cols == 0 || step == 0 {
            return true;
        }
        let mut k = step;
        while k < cols {
            if self.shift(k).rows < self.rows {
                return false;
            }
            k += step;
        }
        true
    }
}

/// The N-array of a module label.
pub fn narray(label: &ModuleLabel) -> NArray {
    let cols = (label.p - 1) as usize;
    let rows = label
        .ws
        .iter()
        .filter(|w| !w.is_scalar())
        .map(|w| (w.q, (0..cols).map(|r| w.ns[r % w.ns.len()]).collect()))
        .collect();
    NArray { rows }
}

/// Minimality of the N-array for the shift step.
pub fn is_shift_minimal(n: &NArray, step: usize) -> bool {
    n.is_shift_minimal(step)
}

/// Membership in `𝒜^[a]`: N fixed by the `t^a` shift and (`l = 0` or `aj ≡ 0 mod p−1`).
pub fn in_a_a(label: &ModuleLabel, a: u64) -> Result<bool> {
    let p = label.p;
    if a == 0 || !(p - 1).is_multiple_of(a) {
        return Err(Error::InvalidLabel(format!("{a} does not divide {}", p - 1)));
    }
    let y = label.y;
    Ok(narray(label).is_shift_fixed(a as usize) && (y.l == 0 || (a * y.j as u64).is_multiple_of(p - 1)))
}

/// Membership in `𝒜^[S]`.
pub fn in_a_s(label: &ModuleLabel) -> bool {
    narray(label).is_shift_fixed(1) && y_part_in_s(label)
}

fn y_part_in_s(label: &ModuleLabel) -> bool {
    let w = label.p - 1;
    let j = label.y.j as u64;
    j.is_multiple_of(w) || (label.y.l == 0 && (j + 1).is_multiple_of(w))
}

/// The critical prime and zig-zag orientation for the exceptional degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZigZag {
    pub q: u64,
    /// True for tuples `(n+1, n)`, false for `(n, n+1)`.
    pub first_larger: bool,
}

/// Zig-zag data for `𝒜^[V]` (p = 7), `𝒜^[P]` (p = 11) and `𝒜^[Q]` (p = 23).
pub fn zigzag(p: u64) -> Option<ZigZag> {
    match p {
        7 => Some(ZigZag { q: 2, first_larger: true }),
        11 => Some(ZigZag { q: 3, first_larger: false }),
        23 => Some(ZigZag { q: 2, first_larger: true }),
        _ => None,
    }
}

/// True iff the critical tuple is the zig-zag pair and every other row is t-fixed.
pub fn is_zigzag(label: &ModuleLabel, z: ZigZag) -> bool {
    let t = label.tuple(z.q);
    if t.len() != 2 {
        return false;
    }
    let ok = if z.first_larger { t[0] == t[1] + 1 } else { t[1] == t[0] + 1 };
    let others = NArray { rows: narray(label).rows.into_iter().filter(|(q, _)| *q != z.q).collect() };
    ok && others.is_shift_fixed(1)
}

fn in_exceptional(label: &ModuleLabel, p: u64) -> bool {
    if label.p != p {
        return false;
    }
    y_part_in_s(label) && (narray(label).is_shift_fixed(1) || is_zigzag(label, zigzag(p).unwrap()))
}

/// Membership in `𝒜^[V]` (degree 7).
pub fn in_a_v(label: &ModuleLabel) -> bool {
    in_exceptional(label, 7)
}

/// Membership in `𝒜^[P]` (degree 11).
pub fn in_a_p(label: &ModuleLabel) -> bool {
    in_exceptional(label, 11)
}

/// Membership in `𝒜^[Q]` (degree 23).
pub fn in_a_q(label: &ModuleLabel) -> bool {
    in_exceptional(label, 23)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(s: &str) -> ModuleLabel {
        s.parse().unwrap()
    }

    #[test]
    fn x_generators() {
        let b3 = x_pj_generator(3, 2, 3).unwrap();
        assert_eq!(b3, DiagExponents::b(3, 3, 3).unwrap());
        let g = x_pj_generator(3, 1, 3).unwrap();
        assert_eq!(g.order(), 3);
        assert!(g.chi().is_identity());
        assert!(x_pj_generator(3, 3, 3).is_err());
    }

    #[test]
    fn y_gens() {
        assert!(y_generators(&YLabel::default(), 3).unwrap().is_empty());
        let z = y_generators(&YLabel::new(0, 2, 0), 3).unwrap();
        assert_eq!(z, vec![DiagExponents::z(3, 9, 9).unwrap()]);
        assert!(y_generators(&YLabel::new(1, 0, 0), 3).is_err());
    }

    #[test]
    fn two_part_diagonals() {
        let w1 = WLabel { q: 2, ns: vec![1, 0], c: 0 };
        assert_eq!(w_generators(&w1, 7).unwrap()[0].exps(), &[1, 1, 1, 0, 1, 0, 0]);
        let w2 = WLabel { q: 2, ns: vec![2, 0], c: 0 };
        assert_eq!(w_generators(&w2, 7).unwrap()[0].exps(), &[3, 3, 1, 2, 3, 0, 0]);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_modules(3, 9).len(), 4);
        assert_eq!(enumerate_modules(3, 1), vec![ModuleLabel::trivial(3)]);
        assert_eq!(enumerate_modules(3, 4).len(), 2);
    }

    #[test]
    fn t_action() {
        let a = label("p=5;Y=1,1,1");
        assert_eq!(t_act(&a).y, YLabel::new(1, 1, 2));
        let b = label("p=7;Y=0,0,0;W[2]=2,1,0");
        assert_eq!(t_act(&b).w(2).unwrap().ns, vec![1, 2]);
        let mut c = label("p=7;Y=3,1,5;W[2]=2,1,1;W[3]=1,2");
        let start = c.clone();
        for _ in 0..6 {
            c = t_act(&c);
        }
        assert_eq!(c, start);
    }

    #[test]
    fn narrays() {
        let a = label("p=7;W[2]=1,0,0");
        let n = narray(&a);
        assert_eq!(n.rows, vec![(2, vec![1, 0, 1, 0, 1, 0])]);
        assert!(n.is_shift_fixed(2) && n.is_shift_minimal(2));
        assert!(!n.is_shift_minimal(1));
        assert!(NArray { rows: vec![] }.is_shift_minimal(1));
    }

    #[test]
    fn memberships() {
        assert!(in_a_s(&ModuleLabel::trivial(7)) && in_a_v(&ModuleLabel::trivial(7)));
        assert!(in_a_s(&label("p=7;Y=6,1,0")));
        let zz = label("p=7;W[2]=2,1,0");
        assert!(in_a_v(&zz) && !in_a_s(&zz));
        assert!(!in_a_v(&label("p=7;W[2]=1,2,0")));
        assert!(in_a_a(&label("p=5;Y=0,1,0"), 3).is_err());
    }

    #[test]
    fn scalar_predicate() {
        assert!(label("p=3;Y=0,2,0;W[2]=0,3").is_scalar());
        assert!(!label("p=3;Y=1,1,0").is_scalar());
        assert!(!label("p=7;W[2]=1,0,0").is_scalar());
    }

    #[test]
    fn label_strings() {
        let s = "p=7;Y=1,1,3;W[2]=1,0,0;W[5]=0,2";
        assert_eq!(label(s).to_string(), s);
        assert!("p=7;Q=1".parse::<ModuleLabel>().is_err());
        assert!("p=7;W[2]=1,0".parse::<ModuleLabel>().is_err());
    }
}
