use crate::arith::divisors;
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

fn cache() -> &'static RwLock<HashMap<u64, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The cyclotomic polynomial Φ_M, coefficients from the constant term up.
pub fn cyclotomic_poly(m: u64) -> Arc<Vec<i64>> {
    assert!(m >= 1, "modulus must be positive");
    if let Some(p) = cache().read().unwrap().get(&m) {
        return p.clone();
    }
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in divisors(m) {
        if d < m {
            num = exact_div_monic(&num, &cyclotomic_poly(d));
        }
    }
    let arc = Arc::new(num);
    cache().write().unwrap().entry(m).or_insert(arc).clone()
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quo = vec![0i64; num.len() - dd];
    for k in (dd..num.len()).rev() {
        let c = rem[k];
        if c != 0 {
            quo[k - dd] = c;
            for (i, &b) in den.iter().enumerate() {
                rem[k - dd + i] -= c * b;
            }
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    quo
}

/// Reduces an integer combination `Σ v[k] ζ_M^k` to power-basis coordinates.
pub fn reduce_int(v: &[i64], m: u64) -> Vec<i64> {
    let phi = cyclotomic_poly(m);
    let deg = phi.len() - 1;
    let mut folded = vec![0i64; (m as usize).max(deg)];
    for (k, &c) in v.iter().enumerate() {
        folded[k % m as usize] += c;
    }
    for k in (deg..folded.len()).rev() {
        let c = folded[k];
        if c != 0 {
            for (i, &b) in phi.iter().enumerate() {
                folded[k - deg + i] -= c * b;
            }
        }
    }
    folded.truncate(deg);
    folded
}
