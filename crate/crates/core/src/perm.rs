//! Permutations of `{0, .., degree-1}` and cycle notation.
//!
//! Internally points are 0-based. Cycle notation read from or written to the
//! outside world is 1-based, e.g. `(1 2)(3 4)`; commas are accepted as point
//! separators so that `(1,2)(3,4)` parses too.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image list, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::NotBijective("degree must be at least 1".into()));
        }
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotBijective(format!("{images:?}")));
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Builds a permutation from 0-based disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::NotBijective("degree must be at least 1".into()));
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(Error::NotBijective(format!(
                        "point {} outside 1..={degree}",
                        p + 1
                    )));
                }
                if std::mem::replace(&mut used[p], true) {
                    return Err(Error::NotBijective(format!("point {} repeated", p + 1)));
                }
                images[p] = cycle[(k + 1) % cycle.len()] as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based cycle notation such as `(1 2)(3 4)` or `()`.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycle_list(text)?
            .into_iter()
            .map(|c| c.into_iter().map(|p| p - 1).collect())
            .collect::<Vec<Vec<usize>>>();
        Permutation::from_cycles(degree, &cycles)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            out[x as usize] = i as u32;
        }
        Permutation { images: out }
    }

    /// Disjoint cycles of length at least 2, 0-based, each starting at its
    /// smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }
}

/// `a ∘ b`: the permutation mapping `i` to `a(b(i))`.
pub fn compose(a: &Permutation, b: &Permutation) -> Result<Permutation> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            expected: a.degree(),
            found: b.degree(),
        });
    }
    Ok(compose_unchecked(a, b))
}

#[inline]
pub(crate) fn compose_unchecked(a: &Permutation, b: &Permutation) -> Permutation {
    Permutation {
        images: b.images.iter().map(|&x| a.images[x as usize]).collect(),
    }
}

/// Splits `(1 2)(3,4)` into its cycles of positive integers. Tokens are not
/// range checked.
pub(crate) fn parse_cycle_list(text: &str) -> Result<Vec<Vec<usize>>> {
    parse_paren_groups(text)?
        .into_iter()
        .map(|group| {
            group
                .iter()
                .map(|tok| match tok.parse::<usize>() {
                    Ok(0) => Err(Error::parse(1, "points are 1-based; found 0")),
                    Ok(p) => Ok(p),
                    Err(_) => Err(Error::parse(1, format!("expected a point, found `{tok}`"))),
                })
                .collect()
        })
        .collect()
}

/// Splits text of the form `(a b)(c, d)` into token groups.
pub(crate) fn parse_paren_groups(text: &str) -> Result<Vec<Vec<String>>> {
    let mut groups = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(Error::parse(1, format!("expected `(` in `{text}`")));
        };
        let Some(close) = body.find(')') else {
            return Err(Error::parse(
                1,
                format!("unbalanced parentheses in `{text}`"),
            ));
        };
        let tokens: Vec<String> = body[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(str::to_string)
            .collect();
        if tokens.iter().any(|t| t.contains('(')) {
            return Err(Error::parse(1, format!("nested parentheses in `{text}`")));
        }
        groups.push(tokens);
        rest = body[close + 1..].trim_start();
    }
    Ok(groups)
}

/// 1-based cycle notation.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cyc(d: usize, cs: &[&[usize]]) -> Permutation {
        let cs: Vec<Vec<usize>> = cs.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(d, &cs).unwrap()
    }

    #[test]
    fn involution_squares_to_identity() {
        let t = cyc(2, &[&[0, 1]]);
        assert_eq!(compose(&t, &t).unwrap(), Permutation::identity(2));
    }

    #[test]
    fn identity_is_neutral() {
        let p = cyc(4, &[&[0, 2, 3]]);
        assert_eq!(compose(&Permutation::identity(4), &p).unwrap(), p);
        assert_eq!(compose(&p, &Permutation::identity(4)).unwrap(), p);
    }

    #[test]
    fn three_cycle_squared() {
        // (0 1 2)∘(0 1 2): 0→1→2, 1→2→0, 2→0→1
        let c = cyc(3, &[&[0, 1, 2]]);
        let sq = compose(&c, &c).unwrap();
        assert_eq!(sq, cyc(3, &[&[0, 2, 1]]));
        assert_eq!(sq.images().collect::<Vec<_>>(), vec![2, 0, 1]);
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let a = cyc(3, &[&[0, 1]]);
        let b = cyc(3, &[&[1, 2]]);
        // a(b(1)) = a(2) = 2; a(b(2)) = a(1) = 0
        let ab = compose(&a, &b).unwrap();
        assert_eq!(ab.apply(1), 2);
        assert_eq!(ab.apply(2), 0);
    }

    #[test]
    fn degree_mismatch() {
        let err = compose(&Permutation::identity(3), &Permutation::identity(4)).unwrap_err();
        assert_eq!(
            err,
            Error::DegreeMismatch {
                expected: 3,
                found: 4
            }
        );
    }

    #[test]
    fn parse_and_display() {
        let p = Permutation::parse_cycles("(1,2)(3 4)", 5).unwrap();
        assert_eq!(p.to_string(), "(1 2)(3 4)");
        assert_eq!(
            Permutation::parse_cycles("()", 3).unwrap(),
            Permutation::identity(3)
        );
        assert_eq!(
            Permutation::parse_cycles("", 3).unwrap(),
            Permutation::identity(3)
        );
    }

    #[test]
    fn parse_rejects_non_bijective() {
        assert!(matches!(
            Permutation::parse_cycles("(1 2 1)", 3),
            Err(Error::NotBijective(_))
        ));
        assert!(matches!(
            Permutation::parse_cycles("(1 2)(2 3)", 3),
            Err(Error::NotBijective(_))
        ));
        assert!(matches!(
            Permutation::parse_cycles("(1 4)", 3),
            Err(Error::NotBijective(_))
        ));
        assert!(matches!(
            Permutation::parse_cycles("(0 1)", 3),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Permutation::parse_cycles("(1 2", 3),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Permutation::from_images(vec![0, 0]),
            Err(Error::NotBijective(_))
        ));
    }

    fn arb_perm(d: usize) -> impl Strategy<Value = Permutation> {
        Just((0..d).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn inverse_cancels(p in arb_perm(9)) {
            prop_assert!(compose(&p, &p.inverse()).unwrap().is_identity());
            prop_assert!(compose(&p.inverse(), &p).unwrap().is_identity());
        }

        #[test]
        fn display_roundtrips(p in arb_perm(8)) {
            prop_assert_eq!(Permutation::parse_cycles(&p.to_string(), 8).unwrap(), p);
        }

        #[test]
        fn compose_is_associative(a in arb_perm(6), b in arb_perm(6), c in arb_perm(6)) {
            let left = compose(&compose(&a, &b).unwrap(), &c).unwrap();
            let right = compose(&a, &compose(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
