//! Dirichlet characters modulo `f`, built from a CRT decomposition of the unit group.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use num_integer::Integer;

use crate::error::{Error, Result};

/// Largest modulus accepted; the discrete-log table has `f` entries.
pub const MAX_MODULUS: u64 = 1 << 22;

#[derive(Debug)]
struct UnitGroup {
    modulus: u64,
    /// Order of each cyclic factor.
    orders: Vec<u32>,
    /// `lcm` of `orders` (1 for the trivial group).
    exponent: u32,
    /// Discrete log of each residue as a linear index into the exponent
    /// lattice; `None` for non-units.
    logs: Vec<Option<Vec<u32>>>,
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    r
}

/// Smallest primitive root modulo an odd prime power `p^e`.
fn primitive_root(p: u64, pe: u64) -> u64 {
    let phi = pe / p * (p - 1);
    let primes: Vec<u64> = factorize(phi).into_iter().map(|(r, _)| r).collect();
    (2..pe)
        .find(|&g| g % p != 0 && primes.iter().all(|&r| pow_mod(g, phi / r, pe) != 1))
        .expect("odd prime powers have primitive roots")
}

/// `x` with `x = a (mod m1)` and `x = 1 (mod m2)`, for coprime `m1, m2`.
fn crt_lift(a: u64, m1: u64, m2: u64) -> u64 {
    if m2 == 1 {
        return a % m1;
    }
    // x = 1 + m2 * t with m2 * t = a - 1 (mod m1)
    let inv = {
        let g = (m2 as i64).extended_gcd(&(m1 as i64));
        g.x.rem_euclid(m1 as i64) as u64
    };
    let t = ((a + m1 - 1 % m1) % m1) as u128 * inv as u128 % m1 as u128;
    ((1 + m2 as u128 * t) % (m1 as u128 * m2 as u128)) as u64
}

impl UnitGroup {
    fn new(f: u64) -> Self {
        let mut gens: Vec<u64> = Vec::new();
        let mut orders: Vec<u32> = Vec::new();
        for (p, e) in factorize(f) {
            let pe = p.pow(e);
            let rest = f / pe;
            if p == 2 {
                if e == 2 {
                    gens.push(crt_lift(3, pe, rest));
                    orders.push(2);
                } else if e >= 3 {
                    gens.push(crt_lift(pe - 1, pe, rest));
                    orders.push(2);
                    gens.push(crt_lift(5, pe, rest));
                    orders.push((pe / 4) as u32);
                }
            } else {
                gens.push(crt_lift(primitive_root(p, pe), pe, rest));
                orders.push((pe / p * (p - 1)) as u32);
            }
        }
        let exponent = orders.iter().fold(1u32, |a, &o| a.lcm(&o));
        let mut logs: Vec<Option<Vec<u32>>> = vec![None; f as usize];
        // Enumerate the exponent lattice in mixed radix.
        let mut idx = vec![0u32; orders.len()];
        loop {
            let mut x = 1 % f;
            for (g, &k) in gens.iter().zip(&idx) {
                x = (x as u128 * pow_mod(*g, k as u64, f) as u128 % f as u128) as u64;
            }
            logs[x as usize] = Some(idx.clone());
            let mut j = 0;
            loop {
                if j == idx.len() {
                    return UnitGroup { modulus: f, orders, exponent, logs };
                }
                idx[j] += 1;
                if idx[j] < orders[j] {
                    break;
                }
                idx[j] = 0;
                j += 1;
            }
        }
    }
}

/// A character modulo `f`, given by one exponent per cyclic factor of the unit group.
#[derive(Debug, Clone)]
pub struct DirichletCharacter {
    group: Arc<UnitGroup>,
    exponents: Vec<u32>,
    index: usize,
    order: u32,
}

impl PartialEq for DirichletCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.group.modulus == other.group.modulus && self.exponents == other.exponents
    }
}

impl fmt::Display for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.group.modulus, self.index)
    }
}

/// Exact value of a character: `0` or `exp(2 pi i num/den)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharValue {
    Zero,
    Root { num: u32, den: u32 },
}

impl CharValue {
    pub fn to_complex(self) -> Complex64 {
        match self {
            CharValue::Zero => Complex64::new(0.0, 0.0),
            CharValue::Root { num, den } => {
                // Exact quarter turns; otherwise the nearest float.
                match (4 * num).checked_rem(den) {
                    Some(0) => match 4 * num / den {
                        0 => Complex64::new(1.0, 0.0),
                        1 => Complex64::new(0.0, 1.0),
                        2 => Complex64::new(-1.0, 0.0),
                        _ => Complex64::new(0.0, -1.0),
                    },
                    _ => Complex64::from_polar(1.0, std::f64::consts::TAU * num as f64 / den as f64),
                }
            }
        }
    }
}

impl DirichletCharacter {
    pub fn modulus(&self) -> u64 {
        self.group.modulus
    }

    /// Position in the ordering of [`characters_mod`].
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Multiplicative order of the character.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_principal(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// `true` when every value is real (order at most 2).
    pub fn is_real(&self) -> bool {
        self.order <= 2
    }

    /// `chi(-1) = -1`.
    pub fn is_odd(&self) -> bool {
        self.value(-1) == CharValue::Root { num: 1, den: 2 }
    }

    /// Exact value at `n`.
    pub fn value(&self, n: i64) -> CharValue {
        let f = self.group.modulus as i64;
        let r = n.rem_euclid(f) as usize;
        match &self.group.logs[r] {
            None => CharValue::Zero,
            Some(log) => {
                let den = self.group.exponent;
                let mut num: u64 = 0;
                for ((&e, &k), &o) in self.exponents.iter().zip(log).zip(&self.group.orders) {
                    num += e as u64 * k as u64 * (den / o) as u64;
                }
                let num = (num % den as u64) as u32;
                let g = num.gcd(&den);
                if num == 0 {
                    CharValue::Root { num: 0, den: 1 }
                } else {
                    CharValue::Root { num: num / g, den: den / g }
                }
            }
        }
    }

    /// `chi(n)` as a complex number; exactly `0`, `+-1` or `+-i` when possible.
    pub fn eval(&self, n: i64) -> Complex64 {
        self.value(n).to_complex()
    }
}

/// `chi(n)`.
pub fn chi_eval(chi: &DirichletCharacter, n: i64) -> Complex64 {
    chi.eval(n)
}

/// All `phi(f)` characters modulo `f`, principal first, ordered
/// lexicographically by exponent vector.
pub fn characters_mod(f: u64) -> Result<Vec<DirichletCharacter>> {
    if f == 0 || f > MAX_MODULUS {
        return Err(Error::BadModulus(f as i64));
    }
    let group = Arc::new(UnitGroup::new(f));
    let orders = group.orders.clone();
    let mut out = Vec::new();
    let mut e = vec![0u32; orders.len()];
    loop {
        let order = e.iter().zip(&orders).fold(1u32, |a, (&x, &o)| if x == 0 { a } else { a.lcm(&(o / x.gcd(&o))) });
        out.push(DirichletCharacter { group: group.clone(), exponents: e.clone(), index: out.len(), order });
        // Lexicographic successor, last coordinate fastest.
        let mut j = e.len();
        loop {
            if j == 0 {
                return Ok(out);
            }
            j -= 1;
            e[j] += 1;
            if e[j] < orders[j] {
                break;
            }
            e[j] = 0;
        }
    }
}

/// The principal character modulo `f`.
pub fn principal(f: u64) -> Result<DirichletCharacter> {
    Ok(characters_mod(f)?.swap_remove(0))
}

/// Parses the address `"f:index"`.
pub fn parse_character(s: &str) -> Result<DirichletCharacter> {
    let bad = || Error::Parse(format!("character must be \"f:index\", got {s:?}"));
    let (f, i) = s.trim().split_once(':').ok_or_else(bad)?;
    let f: u64 = f.trim().parse().map_err(|_| bad())?;
    let i: usize = i.trim().parse().map_err(|_| bad())?;
    let mut all = characters_mod(f)?;
    if i >= all.len() {
        return Err(Error::Domain(format!("modulus {f} has {} characters; index {i} is out of range", all.len())));
    }
    Ok(all.swap_remove(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_principal_first() {
        let phi = |f: u64| (1..=f).filter(|&a| a.gcd(&f) == 1).count();
        for f in 1..=60 {
            let cs = characters_mod(f).unwrap();
            assert_eq!(cs.len(), phi(f), "f = {f}");
            assert!(cs[0].is_principal());
            assert!(cs[1..].iter().all(|c| !c.is_principal()));
        }
    }

    #[test]
    fn documented_values() {
        let c1 = characters_mod(1).unwrap();
        assert_eq!(c1.len(), 1);
        assert_eq!(c1[0].eval(0), Complex64::new(1.0, 0.0));
        assert_eq!(characters_mod(4).unwrap().len(), 2);
        let c3 = characters_mod(3).unwrap();
        assert_eq!(c3[1].eval(2), Complex64::new(-1.0, 0.0));
        assert_eq!(principal(5).unwrap().eval(7), Complex64::new(1.0, 0.0));
        assert_eq!(parse_character("4:1").unwrap().eval(3), Complex64::new(-1.0, 0.0));
        for c in characters_mod(6).unwrap() {
            assert_eq!(c.eval(4), Complex64::new(0.0, 0.0));
        }
    }

    #[test]
    fn orders() {
        let c5 = characters_mod(5).unwrap();
        let mut ords: Vec<u32> = c5.iter().map(|c| c.order()).collect();
        ords.sort();
        assert_eq!(ords, vec![1, 2, 4, 4]);
        for c in &c5 {
            for n in 1..5 {
                let v = c.eval(n).powu(c.order());
                assert!((v - 1.0).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn distinct_characters() {
        for f in [8u64, 12, 15, 16, 24] {
            let cs = characters_mod(f).unwrap();
            for i in 0..cs.len() {
                for j in 0..i {
                    assert!((1..f as i64).any(|n| (cs[i].eval(n) - cs[j].eval(n)).norm() > 1e-9));
                }
            }
        }
    }

    #[test]
    fn bad_addresses() {
        assert!(parse_character("4").is_err());
        assert!(parse_character("4:2").is_err());
        assert!(parse_character("0:0").is_err());
    }
}
