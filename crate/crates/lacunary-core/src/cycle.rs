//! Eventual periodicity of k ↦ 2^k mod 2n.
//!
//! The series c_n = Σ_{k≥1} 2^{-k} e^{iπ·(2^k mod 2n)/n} only sees the
//! residues 2^k mod 2n, and those are eventually periodic: writing
//! 2n = 2^{v+1}·q with q odd (v = v₂(n)), the residues for k ≤ v form the
//! preperiod, and from k = v+1 on they repeat with period L = ord_q(2)
//! (L = 1 with residue 0 when q = 1). That turns the infinite sum into a
//! finite expression — preperiod terms plus one period closed by the
//! geometric factor 1/(1−2^{-L}) — with *zero* truncation error.
//!
//! The only number theory needed is the multiplicative order of 2 mod q,
//! which we get by factoring φ(q) and stripping prime factors while
//! 2^{t/p} ≡ 1. Factoring uses deterministic Miller–Rabin plus Brent's
//! variant of Pollard's rho (u64 inputs, u128 intermediates), which is
//! instantaneous at the 2^50 scale this crate admits.

use crate::CoreError;

/// How many cycle residues are materialized at most. Terms carry weights
/// 2^{-k}, so anything past k ≈ 110 is invisible at double-double
/// resolution; 192 leaves a wide gap between "stored" and "meaningful"
/// (the tail dropped when a cycle is truncated is below 2^{-193}).
pub const MAX_STORED_CYCLE: usize = 192;

/// The orbit structure of 2^k mod 2n for one n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    /// The n this decomposition belongs to.
    pub n: u64,
    /// 2n — the modulus the residues live under.
    pub modulus: u64,
    /// Residues 2^k mod 2n for k = 1..=p, where p = v₂(n). Empty for odd n.
    pub preperiod: Vec<u64>,
    /// Residues for k = p+1, p+2, …: one full period when it fits in
    /// [`MAX_STORED_CYCLE`], otherwise the first `MAX_STORED_CYCLE` entries
    /// (see [`CycleDecomposition::truncated`]).
    pub cycle: Vec<u64>,
    /// The minimal period L = ord_q(2), even when `cycle` is truncated.
    pub period: u64,
}

impl CycleDecomposition {
    /// True when `cycle` holds fewer than `period` residues. The weighted
    /// series then has to be summed term-by-term over the stored prefix,
    /// which still reproduces the exact value to below 2^-193.
    pub fn truncated(&self) -> bool {
        (self.cycle.len() as u64) < self.period
    }

    /// Residue for arbitrary k ≥ 1 (test hook for the reproduction
    /// invariant). Panics if the index needs a truncated part we dropped.
    pub fn residue_at(&self, k: u64) -> u64 {
        assert!(k >= 1);
        let p = self.preperiod.len() as u64;
        if k <= p {
            self.preperiod[(k - 1) as usize]
        } else {
            let idx = ((k - p - 1) % self.period) as usize;
            self.cycle[idx]
        }
    }
}

/// Largest admissible n: beyond 2^50 the doubled modulus and the folded
/// numerators inside the trig layer would no longer be exact in f64.
pub const MAX_N: u64 = 1 << 50;

/// Decomposes the orbit of k ↦ 2^k mod 2n into minimal preperiod and
/// minimal period.
///
/// # Errors
/// [`CoreError::Argument`] unless 1 ≤ n ≤ 2^50.
pub fn cycle_of_two_mod(n: u64) -> Result<CycleDecomposition, CoreError> {
    if n == 0 || n > MAX_N {
        return Err(CoreError::Argument("n must lie in 1..=2^50"));
    }
    let v = n.trailing_zeros() as u64;
    let q = n >> v; // odd part; 2n = 2^{v+1} · q
    let modulus = 2 * n;

    // Minimality: for k ≤ v the residue is not yet divisible by 2^{v+1},
    // from k = v+1 it is, and mod q the orbit of 2 is purely periodic —
    // so p = v exactly, and L = ord_q(2) exactly.
    let period = if q == 1 { 1 } else { order_of_two(q) };

    let stored = period.min(MAX_STORED_CYCLE as u64) as usize;
    let mut preperiod = Vec::with_capacity(v as usize);
    let mut cycle = Vec::with_capacity(stored);
    let mut r: u64 = 1;
    for _ in 0..v {
        r = (r * 2) % modulus; // r < 2n ≤ 2^51: doubling cannot overflow
        preperiod.push(r);
    }
    for _ in 0..stored {
        r = (r * 2) % modulus;
        cycle.push(r);
    }
    Ok(CycleDecomposition {
        n,
        modulus,
        preperiod,
        cycle,
        period,
    })
}

/// Multiplicative order of 2 modulo odd q ≥ 3: start from t = φ(q) and
/// strip each prime of t while 2^{t/p} stays ≡ 1.
fn order_of_two(q: u64) -> u64 {
    debug_assert!(q >= 3 && q % 2 == 1);
    let phi = euler_phi(q);
    let mut t = phi;
    for &p in &factorize(phi) {
        while t % p == 0 && mod_pow(2, t / p, q) == 1 {
            t /= p;
        }
    }
    debug_assert_eq!(mod_pow(2, t, q), 1);
    t
}

fn euler_phi(x: u64) -> u64 {
    let mut phi = x;
    for &p in &factorize(x) {
        phi = phi / p * (p - 1);
    }
    phi
}

/// Sorted, deduplicated prime factors.
fn factorize(mut x: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if x % small == 0 {
            primes.push(small);
            while x % small == 0 {
                x /= small;
            }
        }
    }
    let mut stack = vec![x];
    while let Some(y) = stack.pop() {
        if y == 1 {
            continue;
        }
        if is_prime(y) {
            primes.push(y);
            continue;
        }
        let d = pollard_rho(y);
        stack.push(d);
        stack.push(y / d);
    }
    primes.sort_unstable();
    primes.dedup();
    primes
}

fn mod_mul(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc: u64 = 1;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, m);
        }
        base = mod_mul(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin: the seven-base set proven complete for all
/// u64 inputs.
fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if x % p == 0 {
            return x == p;
        }
    }
    let d = (x - 1) >> (x - 1).trailing_zeros();
    'witness: for a in [2u64, 325, 9375, 28178, 450775, 9780504, 1795265022] {
        let mut t = d;
        let mut y = mod_pow(a % x, t, x);
        if y == 0 || y == 1 || y == x - 1 {
            continue;
        }
        while t != x - 1 {
            y = mod_mul(y, y, x);
            t <<= 1;
            if y == x - 1 {
                continue 'witness;
            }
            if y == 1 {
                return false;
            }
        }
        return false;
    }
    true
}

/// Pollard's rho with Floyd cycle detection. Input must be odd, composite,
/// and free of the small primes already stripped; some polynomial offset c
/// always succeeds, and at the ≤2^50 scale admitted here the expected cost
/// is a few thousand modular squarings.
fn pollard_rho(x: u64) -> u64 {
    debug_assert!(x % 2 == 1 && !is_prime(x) && x > 1);
    let mut c: u64 = 1;
    loop {
        let f = |y: u64| (mod_mul(y, y, x) + c) % x;
        let mut slow: u64 = 2;
        let mut fast = f(2);
        loop {
            let g = gcd(slow.abs_diff(fast), x);
            if g == x {
                break; // cycle closed without exposing a factor: new c
            }
            if g > 1 {
                return g;
            }
            slow = f(slow);
            fast = f(f(fast));
        }
        c += 1;
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
