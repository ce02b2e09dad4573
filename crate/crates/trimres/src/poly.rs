//! Homogeneous polynomials in k[x,y,z].
//!
//! A `HomogPoly` carries an explicit degree annotation so that the zero
//! polynomial of each degree is a distinct, well-typed value (graded maps
//! need the degree of every entry, including zero ones). Stored terms all
//! have the annotated degree and nonzero coefficients.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::monomial::{strand_basis, strand_index, Monomial};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogPoly {
    pub field: Field,
    pub degree: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl HomogPoly {
    pub fn zero(field: Field, degree: usize) -> Self {
        HomogPoly {
            field,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(field: Field, m: Monomial) -> Self {
        Self::term(field.one(), m)
    }

    pub fn term(coeff: Scalar, m: Monomial) -> Self {
        let field = coeff.field();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(m, coeff);
        }
        HomogPoly {
            field,
            degree: m.degree(),
            terms,
        }
    }

    pub fn var(field: Field, i: usize) -> Self {
        Self::monomial(field, Monomial::var(i))
    }

    pub fn one(field: Field) -> Self {
        Self::monomial(field, Monomial::ONE)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero only when the polynomial is a nonzero constant, i.e. a unit.
    pub fn unit_coeff(&self) -> Option<&Scalar> {
        if self.degree == 0 {
            self.terms.get(&Monomial::ONE)
        } else {
            None
        }
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: &Scalar) {
        debug_assert_eq!(m.degree(), self.degree);
        let cur = self.terms.remove(&m);
        let new = match cur {
            Some(old) => old.add(c),
            None => c.clone(),
        };
        if !new.is_zero() {
            self.terms.insert(m, new);
        }
    }

    pub fn add(&self, other: &HomogPoly) -> HomogPoly {
        // Zero polynomials are compatible with any degree; this matters in
        // block constructions where a forced degree can be negative and is
        // then represented by a zero of nominal degree.
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        assert_eq!(self.degree, other.degree, "degree mismatch in add");
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.add_term(*m, c);
        }
        out
    }

    pub fn sub(&self, other: &HomogPoly) -> HomogPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> HomogPoly {
        let mut out = HomogPoly::zero(self.field, self.degree);
        for (m, c) in self.terms.iter() {
            out.terms.insert(*m, c.neg());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> HomogPoly {
        let mut out = HomogPoly::zero(self.field, self.degree);
        if c.is_zero() {
            return out;
        }
        for (m, a) in self.terms.iter() {
            let v = a.mul(c);
            if !v.is_zero() {
                out.terms.insert(*m, v);
            }
        }
        out
    }

    pub fn mul(&self, other: &HomogPoly) -> HomogPoly {
        let mut out = HomogPoly::zero(self.field, self.degree + other.degree);
        for (m, a) in self.terms.iter() {
            for (n, b) in other.terms.iter() {
                out.add_term(m.mul(n), &a.mul(b));
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> HomogPoly {
        let mut out = HomogPoly::zero(self.field, self.degree + m.degree());
        for (n, c) in self.terms.iter() {
            out.terms.insert(m.mul(n), c.clone());
        }
        out
    }

    /// Coordinates in the graded-lex basis of the degree strand.
    pub fn to_vec(&self) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); crate::monomial::strand_dim(self.degree)];
        for (m, c) in self.terms.iter() {
            v[strand_index(m)] = c.clone();
        }
        v
    }

    pub fn from_vec(field: Field, degree: usize, v: &[Scalar]) -> HomogPoly {
        let basis = strand_basis(degree);
        assert_eq!(v.len(), basis.len());
        let mut out = HomogPoly::zero(field, degree);
        for (m, c) in basis.iter().zip(v.iter()) {
            if !c.is_zero() {
                out.terms.insert(*m, c.clone());
            }
        }
        out
    }
}

impl fmt::Display for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for m in strand_basis(self.degree) {
            let c = match self.terms.get(&m) {
                Some(c) => c,
                None => continue,
            };
            let cs = c.to_string();
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", cs),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            if m.degree() == 0 {
                write!(f, "{}", mag)?;
            } else if mag == "1" {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", mag, m)?;
            }
        }
        Ok(())
    }
}

/// Parse the textual polynomial syntax: `+`/`-` separated terms, each an
/// optional integer coefficient and `*`-joined variable powers, e.g.
/// `3*x^2*y - z^3`. Rejects inhomogeneous input.
pub fn parse_poly(field: Field, input: &str) -> Result<HomogPoly> {
    let s: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut i = 0usize;
    let mut terms: Vec<(Scalar, Monomial)> = Vec::new();
    while i < s.len() {
        let mut sign = 1i64;
        while i < s.len() && (s[i] == '+' || s[i] == '-') {
            if s[i] == '-' {
                sign = -sign;
            }
            i += 1;
        }
        if i >= s.len() {
            return Err(Error::Parse(format!("trailing sign in `{}`", input)));
        }
        let mut coeff: Option<i64> = None;
        if s[i].is_ascii_digit() {
            let start = i;
            while i < s.len() && s[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = s[start..i].iter().collect();
            let n: i64 = digits
                .parse()
                .map_err(|_| Error::Parse(format!("coefficient overflow in `{}`", input)))?;
            coeff = Some(n);
        }
        let mut exps = [0u32; 3];
        loop {
            if i < s.len() && s[i] == '*' {
                i += 1;
                continue;
            }
            let vi = match s.get(i) {
                Some('x') => 0,
                Some('y') => 1,
                Some('z') => 2,
                _ => break,
            };
            i += 1;
            let mut e = 1u32;
            if i < s.len() && s[i] == '^' {
                i += 1;
                let start = i;
                while i < s.len() && s[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err(Error::Parse(format!("missing exponent in `{}`", input)));
                }
                let digits: String = s[start..i].iter().collect();
                e = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("exponent overflow in `{}`", input)))?;
            }
            exps[vi] += e;
        }
        if coeff.is_none() && exps == [0, 0, 0] {
            return Err(Error::Parse(format!(
                "unexpected character `{}` in `{}`",
                s[i], input
            )));
        }
        let c = field.from_i64(sign * coeff.unwrap_or(1));
        terms.push((c, Monomial(exps)));
    }
    let degree = terms[0].1.degree();
    for (_, m) in &terms {
        if m.degree() != degree {
            return Err(Error::Inhomogeneous(input.trim().to_string()));
        }
    }
    let mut out = HomogPoly::zero(field, degree);
    for (c, m) in terms {
        out.add_term(m, &c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const F: Field = Field::Fp(32003);

    fn p(s: &str) -> HomogPoly {
        parse_poly(F, s).unwrap()
    }

    #[test]
    fn parse_and_display_roundtrip() {
        for s in ["x", "3*x^2*y - z^3 + y^3", "x*y*z", "7", "-x + y"] {
            let f = p(s);
            assert_eq!(parse_poly(F, &f.to_string()).unwrap(), f);
        }
    }

    #[test]
    fn parse_rejects_inhomogeneous() {
        assert!(matches!(
            parse_poly(F, "x^2 + y"),
            Err(Error::Inhomogeneous(_))
        ));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_poly(F, "x :+ y").is_err());
        assert!(parse_poly(F, "").is_err());
        assert!(parse_poly(F, "x + ").is_err());
    }

    #[test]
    fn product_examples() {
        assert_eq!(p("x").mul(&p("y")), p("x*y"));
        assert_eq!(p("x + y").mul(&p("x - y")), p("x^2 - y^2"));
        let z = HomogPoly::zero(F, 2);
        let prod = p("x^3").mul(&z);
        assert!(prod.is_zero());
        assert_eq!(prod.degree, 5);
    }

    #[test]
    fn vec_roundtrip() {
        let f = p("3*x^2*y - z^3 + 5*y^2*z");
        assert_eq!(HomogPoly::from_vec(F, 3, &f.to_vec()), f);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn poly_strategy(degree: usize) -> impl Strategy<Value = HomogPoly> {
            proptest::collection::vec(0i64..32003, crate::monomial::strand_dim(degree))
                .prop_map(move |coeffs| {
                    let v: Vec<crate::field::Scalar> =
                        coeffs.iter().map(|&c| F.from_i64(c)).collect();
                    HomogPoly::from_vec(F, degree, &v)
                })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(32))]
            #[test]
            fn mul_commutes(f in poly_strategy(2), g in poly_strategy(3)) {
                prop_assert_eq!(f.mul(&g), g.mul(&f));
            }

            #[test]
            fn mul_associates(f in poly_strategy(1), g in poly_strategy(2), h in poly_strategy(2)) {
                prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
            }

            #[test]
            fn mul_distributes(f in poly_strategy(2), g in poly_strategy(3), h in poly_strategy(3)) {
                prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
            }
        }
    }
}
