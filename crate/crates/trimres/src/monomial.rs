//! Monomials in the three variables x, y, z.
//!
//! The ordering is graded lexicographic with x > y > z: monomials compare
//! first by total degree, then lexicographically on exponent triples, and
//! `strand_basis` lists each degree in that fixed order. Every fixture in
//! the crate depends on this order being stable.

use std::cmp::Ordering;
use std::fmt;

pub const VARS: [char; 3] = ['x', 'y', 'z'];

/// A monomial x^a y^b z^c, stored as its exponent triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn var(i: usize) -> Monomial {
        let mut e = [0; 3];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> usize {
        (self.0[0] + self.0[1] + self.0[2]) as usize
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// other / self, assuming divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial([
            other.0[0] - self.0[0],
            other.0[1] - self.0[1],
            other.0[2] - self.0[2],
        ])
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        // Ascending in degree, then descending lex, so that iterating a
        // BTreeMap visits each strand in `strand_basis` order.
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", VARS[i])?;
            } else {
                write!(f, "{}^{}", VARS[i], e)?;
            }
        }
        Ok(())
    }
}

/// Number of monomials of degree d in three variables: binom(d+2, 2).
pub fn strand_dim(d: usize) -> usize {
    (d + 1) * (d + 2) / 2
}

/// The monomial basis of the degree-d strand, in graded-lex order
/// (x^d first, z^d last).
pub fn strand_basis(d: usize) -> Vec<Monomial> {
    let d = d as u32;
    let mut out = Vec::with_capacity(strand_dim(d as usize));
    for a in (0..=d).rev() {
        for b in (0..=d - a).rev() {
            out.push(Monomial([a, b, d - a - b]));
        }
    }
    out
}

/// Index of a monomial within `strand_basis(m.degree())`, without
/// materializing the basis.
pub fn strand_index(m: &Monomial) -> usize {
    let d = m.degree() as u32;
    let a = m.0[0];
    let b = m.0[1];
    // Monomials with first exponent > a precede; then within first
    // exponent a, those with second exponent > b.
    let before_a: u32 = (a + 1..=d).map(|t| d - t + 1).sum();
    (before_a + (d - a - b)) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strand_sizes() {
        assert_eq!(strand_basis(0), vec![Monomial::ONE]);
        assert_eq!(
            strand_basis(1),
            vec![Monomial::var(0), Monomial::var(1), Monomial::var(2)]
        );
        assert_eq!(strand_basis(2).len(), 6);
        for d in 0..10 {
            assert_eq!(strand_basis(d).len(), strand_dim(d));
        }
    }

    #[test]
    fn strand_order_is_graded_lex() {
        let b = strand_basis(2);
        let names: Vec<String> = b.iter().map(|m| m.to_string()).collect();
        assert_eq!(names, ["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"]);
    }

    #[test]
    fn strand_index_matches_basis() {
        for d in 0..8 {
            for (i, m) in strand_basis(d).iter().enumerate() {
                assert_eq!(strand_index(m), i);
            }
        }
    }

    #[test]
    fn ord_agrees_with_strand_order() {
        let b = strand_basis(3);
        for w in b.windows(2) {
            assert!(w[0] < w[1]);
        }
        assert!(Monomial([1, 0, 0]) < Monomial([0, 2, 0]));
    }
}
