//! Coefficient rings: the integers, or the integers modulo m.
//!
//! The half-integer scalars `a` (1/2 for even n, 1 for odd n) and
//! `b` (1 for even n, 1/2 for odd n) never appear at runtime; only the
//! integer products `n*a`, `2a`, `(n-1)b`, `(n-1)(n-2)b`, `2b` are
//! materialized, branching on the parity of n.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ring {
    /// The ring of integers.
    Z,
    /// The quotient Z/mZ with m >= 2; canonical representatives in [0, m).
    Mod(u64),
}

impl Ring {
    pub fn modulus(&self) -> Option<u64> {
        match self {
            Ring::Z => None,
            Ring::Mod(m) => Some(*m),
        }
    }

    pub fn canonicalize(&self, x: &BigInt) -> BigInt {
        match self {
            Ring::Z => x.clone(),
            Ring::Mod(m) => x.mod_floor(&BigInt::from(*m)),
        }
    }

    pub fn is_zero(&self, x: &BigInt) -> bool {
        match self {
            Ring::Z => x.is_zero(),
            Ring::Mod(m) => x.mod_floor(&BigInt::from(*m)).is_zero(),
        }
    }

    /// Does `k * x = 0` have only the zero solution? (Trivial k-torsion.)
    pub fn has_trivial_torsion(&self, k: u64) -> bool {
        match self {
            Ring::Z => true,
            Ring::Mod(m) => k.gcd(m) == 1,
        }
    }

    /// Canonical representatives of the 2-torsion subgroup R[2].
    pub fn two_torsion(&self) -> Vec<BigInt> {
        self.torsion(2)
    }

    /// Canonical representatives of the k-torsion subgroup R[k].
    pub fn torsion(&self, k: u64) -> Vec<BigInt> {
        match self {
            Ring::Z => vec![BigInt::zero()],
            Ring::Mod(m) => {
                let g = k.gcd(m);
                let step = m / g;
                (0..g).map(|i| BigInt::from(i * step)).collect()
            }
        }
    }

    /// A generator of the (cyclic) k-torsion subgroup.
    pub fn torsion_generator(&self, k: u64) -> BigInt {
        match self {
            Ring::Z => BigInt::zero(),
            Ring::Mod(m) => {
                let g = k.gcd(m);
                BigInt::from(m / g)
            }
        }
    }

    pub fn contains_in_ideal(&self, x: &BigInt, d: u64) -> bool {
        // Is x in the ideal dR?
        match self {
            Ring::Z => {
                if d == 0 {
                    x.is_zero()
                } else {
                    x.mod_floor(&BigInt::from(d)).is_zero()
                }
            }
            Ring::Mod(m) => {
                // dR = gcd(d, m) * (Z/m)
                let g = d.gcd(m);
                if g == 0 {
                    self.is_zero(x)
                } else {
                    x.mod_floor(&BigInt::from(g)).is_zero()
                }
            }
        }
    }

    pub fn label(&self) -> String {
        match self {
            Ring::Z => "Z".to_string(),
            Ring::Mod(m) => format!("Z/{m}"),
        }
    }

    pub fn parse(text: &str) -> Option<Ring> {
        if text == "Z" {
            return Some(Ring::Z);
        }
        let rest = text
            .strip_prefix("Z/")
            .or_else(|| text.strip_prefix("Zmod:"))?;
        let m: u64 = rest.parse().ok()?;
        if m >= 2 {
            Some(Ring::Mod(m))
        } else {
            None
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Integer constants derived from the half-integer scalars a and b at a
/// given strand count n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Scalars {
    pub n: usize,
    /// n * a
    pub na: u64,
    /// 2a
    pub two_a: u64,
    /// (n-1) * b
    pub b_n1: u64,
    /// (n-1)(n-2) * b
    pub b_n1_n2: u64,
    /// 2b
    pub two_b: u64,
}

impl Scalars {
    pub fn for_n(n: usize) -> Scalars {
        let nu = n as u64;
        if n % 2 == 0 {
            Scalars {
                n,
                na: nu / 2,
                two_a: 1,
                b_n1: nu - 1,
                b_n1_n2: (nu - 1) * (nu - 2),
                two_b: 2,
            }
        } else {
            Scalars {
                n,
                na: nu,
                two_a: 2,
                b_n1: (nu - 1) / 2,
                b_n1_n2: (nu - 1) * (nu - 2) / 2,
                two_b: 1,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_table() {
        let s4 = Scalars::for_n(4);
        assert_eq!((s4.na, s4.two_a, s4.b_n1, s4.b_n1_n2, s4.two_b), (2, 1, 3, 6, 2));
        let s5 = Scalars::for_n(5);
        assert_eq!((s5.na, s5.two_a, s5.b_n1, s5.b_n1_n2, s5.two_b), (5, 2, 2, 6, 1));
        let s6 = Scalars::for_n(6);
        assert_eq!((s6.na, s6.two_a, s6.b_n1, s6.b_n1_n2, s6.two_b), (3, 1, 5, 20, 2));
    }

    #[test]
    fn torsion_subgroups() {
        assert_eq!(Ring::Z.two_torsion(), vec![BigInt::from(0)]);
        assert_eq!(
            Ring::Mod(4).two_torsion(),
            vec![BigInt::from(0), BigInt::from(2)]
        );
        assert_eq!(Ring::Mod(3).two_torsion(), vec![BigInt::from(0)]);
        assert_eq!(
            Ring::Mod(6).torsion(3),
            vec![BigInt::from(0), BigInt::from(2), BigInt::from(4)]
        );
    }

    #[test]
    fn ring_labels_roundtrip() {
        for ring in [Ring::Z, Ring::Mod(2), Ring::Mod(6)] {
            assert_eq!(Ring::parse(&ring.label()), Some(ring));
        }
        assert_eq!(Ring::parse("Zmod:5"), Some(Ring::Mod(5)));
        assert_eq!(Ring::parse("Zmod:1"), None);
    }
}
