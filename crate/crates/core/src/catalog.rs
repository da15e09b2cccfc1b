//! Builtin groups, group files and the survey corpus.
//!
//! Group names: `S<n>`, `A<n>`, `D<2n>` (dihedral of order `2n`), `C<n>`,
//! `Q8`, direct products joined with `x` (`C2xC2`, `D8xC3`), and
//! `file:<path>`.
//!
//! Every builtin carries named generators so elements can be written as
//! words, e.g. `(s r)` for `s·r` in a dihedral group:
//!
//! | group | generators |
//! |-------|------------|
//! | `C<n>` | `c` |
//! | `D<2n>` | `r` rotation, `s` reflection fixing point 1 |
//! | `S<n>` | `t` = (1 2), `c` = (1 2 … n) |
//! | `A<n>` | `a` = (1 2 3), `b` = (1 2 … n) for odd n, (2 3 … n) for even n |
//! | `Q8` | `i`, `j` |
//! | products | factor names suffixed by factor position: `r1`, `s1`, `c2` |
//! | files | `g1`, `g2`, … in file order |

use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{GroupTable, Limits};
use crate::perm::{parse_paren_groups, Permutation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    Symmetric(usize),
    Alternating(usize),
    /// Dihedral group of the given order (`2n`, symmetries of an `n`-gon).
    Dihedral(usize),
    Cyclic(usize),
    Quaternion8,
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
    FromFile(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: String,
    pub construction: Construction,
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl GroupSpec {
    pub fn symmetric(n: usize) -> Self {
        GroupSpec {
            name: format!("S{n}"),
            construction: Construction::Symmetric(n),
        }
    }

    pub fn alternating(n: usize) -> Self {
        GroupSpec {
            name: format!("A{n}"),
            construction: Construction::Alternating(n),
        }
    }

    pub fn dihedral(order: usize) -> Self {
        GroupSpec {
            name: format!("D{order}"),
            construction: Construction::Dihedral(order),
        }
    }

    pub fn cyclic(n: usize) -> Self {
        GroupSpec {
            name: format!("C{n}"),
            construction: Construction::Cyclic(n),
        }
    }

    pub fn quaternion8() -> Self {
        GroupSpec {
            name: "Q8".into(),
            construction: Construction::Quaternion8,
        }
    }

    pub fn direct_product(a: GroupSpec, b: GroupSpec) -> Self {
        GroupSpec {
            name: format!("{}x{}", a.name, b.name),
            construction: Construction::DirectProduct(Box::new(a), Box::new(b)),
        }
    }

    pub fn from_file(path: impl Into<PathBuf>) -> Self {
        let path = path.into();
        GroupSpec {
            name: format!("file:{}", path.display()),
            construction: Construction::FromFile(path),
        }
    }

    /// Parses a group name such as `D12`, `C2xC2` or `file:groups/m11.txt`.
    pub fn parse(name: &str) -> Result<GroupSpec> {
        let name = name.trim();
        if let Some(path) = name.strip_prefix("file:") {
            return Ok(GroupSpec::from_file(path));
        }
        let unknown = || Error::UnknownGroup(name.to_string());
        let mut factors = name.split('x').map(|part| {
            let (kind, digits) = part.split_at(
                part.find(|c: char| c.is_ascii_digit())
                    .ok_or_else(unknown)?,
            );
            let n: usize = digits.parse().map_err(|_| unknown())?;
            Ok(match kind {
                "S" => GroupSpec::symmetric(n),
                "A" => GroupSpec::alternating(n),
                "D" => GroupSpec::dihedral(n),
                "C" => GroupSpec::cyclic(n),
                "Q" if n == 8 => GroupSpec::quaternion8(),
                _ => return Err(unknown()),
            })
        });
        let first = factors.next().ok_or_else(unknown)??;
        factors.try_fold(first, |acc, f| Ok(GroupSpec::direct_product(acc, f?)))
    }

    /// The order the construction must produce, when known without building.
    pub fn expected_order(&self) -> Option<usize> {
        match &self.construction {
            Construction::Symmetric(n) => Some((1..=*n).product()),
            Construction::Alternating(n) => Some(((1..=*n).product::<usize>() / 2).max(1)),
            Construction::Dihedral(order) | Construction::Cyclic(order) => Some(*order),
            Construction::Quaternion8 => Some(8),
            Construction::DirectProduct(a, b) => Some(a.expected_order()? * b.expected_order()?),
            Construction::FromFile(_) => None,
        }
    }

    /// Builds the group table, checking the order formula and the caps.
    pub fn build(&self, limits: &Limits) -> Result<BuiltGroup> {
        if let Some(order) = self.expected_order() {
            if order > limits.max_order {
                return Err(Error::OrderCapExceeded {
                    cap: limits.max_order,
                });
            }
        }
        let (gens, names) = self.generators()?;
        let degree = gens[0].degree();
        limits.check_degree(degree)?;
        let table = GroupTable::closure(&gens, limits.max_order)?;
        if let Some(order) = self.expected_order() {
            assert_eq!(
                table.order(),
                order,
                "{} built with the wrong order",
                self.name
            );
        }
        if let Construction::Dihedral(order) = self.construction {
            if order >= 6 {
                check_dihedral_relation(&table, order / 2);
            }
        }
        let named = names
            .into_iter()
            .zip(table.generators().iter().copied())
            .collect();
        Ok(BuiltGroup {
            name: self.name.clone(),
            table: Arc::new(table),
            named,
        })
    }

    /// Generator permutations and their names.
    fn generators(&self) -> Result<(Vec<Permutation>, Vec<String>)> {
        let invalid = |msg: &str| Error::UnknownGroup(format!("{}: {msg}", self.name));
        let cycles =
            |d: usize, cs: &[Vec<usize>]| Permutation::from_cycles(d, cs).expect("valid cycles");
        Ok(match &self.construction {
            Construction::Cyclic(n) => {
                if *n == 0 {
                    return Err(invalid("order must be positive"));
                }
                (vec![cyclic_generator(*n)], vec!["c".into()])
            }
            Construction::Dihedral(order) => {
                if *order < 4 || order % 2 == 1 {
                    return Err(invalid("dihedral order must be even and at least 4"));
                }
                let n = order / 2;
                if n == 2 {
                    // Klein four-group: the 2-gon action is not faithful.
                    let r = cycles(4, &[vec![0, 1], vec![2, 3]]);
                    let s = cycles(4, &[vec![0, 2], vec![1, 3]]);
                    (vec![r, s], vec!["r".into(), "s".into()])
                } else {
                    let r = cycles(n, &[(0..n).collect()]);
                    let s = Permutation::from_images((0..n).map(|i| (n - i) % n).collect())?;
                    (vec![r, s], vec!["r".into(), "s".into()])
                }
            }
            Construction::Symmetric(n) => {
                if *n == 0 {
                    return Err(invalid("degree must be positive"));
                }
                if *n == 1 {
                    (vec![Permutation::identity(1)], vec!["t".into()])
                } else {
                    let t = cycles(*n, &[vec![0, 1]]);
                    let c = cycles(*n, &[(0..*n).collect()]);
                    (vec![t, c], vec!["t".into(), "c".into()])
                }
            }
            Construction::Alternating(n) => {
                if *n == 0 {
                    return Err(invalid("degree must be positive"));
                }
                if *n < 3 {
                    (vec![Permutation::identity(*n)], vec!["a".into()])
                } else if *n == 3 {
                    (vec![cycles(3, &[vec![0, 1, 2]])], vec!["a".into()])
                } else {
                    let a = cycles(*n, &[vec![0, 1, 2]]);
                    let b = if n % 2 == 1 {
                        cycles(*n, &[(0..*n).collect()])
                    } else {
                        cycles(*n, &[(1..*n).collect()])
                    };
                    (vec![a, b], vec!["a".into(), "b".into()])
                }
            }
            Construction::Quaternion8 => {
                let (i, j) = quaternion_generators();
                (vec![i, j], vec!["i".into(), "j".into()])
            }
            Construction::DirectProduct(_, _) => {
                let mut factors = Vec::new();
                flatten_product(self, &mut factors);
                let mut parts = Vec::new();
                for f in &factors {
                    parts.push(f.generators()?);
                }
                let total: usize = parts.iter().map(|(g, _)| g[0].degree()).sum();
                let mut gens = Vec::new();
                let mut names = Vec::new();
                let mut offset = 0;
                for (pos, (fgens, fnames)) in parts.iter().enumerate() {
                    let d = fgens[0].degree();
                    for (g, name) in fgens.iter().zip(fnames) {
                        let mut images: Vec<usize> = (0..total).collect();
                        for (p, img) in g.images().enumerate() {
                            images[offset + p] = offset + img;
                        }
                        gens.push(Permutation::from_images(images)?);
                        names.push(format!("{name}{}", pos + 1));
                    }
                    offset += d;
                }
                (gens, names)
            }
            Construction::FromFile(path) => {
                let gens = read_group_file(path)?;
                let names = (1..=gens.len()).map(|k| format!("g{k}")).collect();
                (gens, names)
            }
        })
    }
}

fn flatten_product<'a>(spec: &'a GroupSpec, out: &mut Vec<&'a GroupSpec>) {
    match &spec.construction {
        Construction::DirectProduct(a, b) => {
            flatten_product(a, out);
            flatten_product(b, out);
        }
        _ => out.push(spec),
    }
}

/// `C_n` as a product of disjoint prime-power cycles, which keeps the degree
/// at the sum of the prime-power factors of `n`.
fn cyclic_generator(n: usize) -> Permutation {
    if n == 1 {
        return Permutation::identity(1);
    }
    let mut lengths = Vec::new();
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        if m.is_multiple_of(p) {
            let mut q = 1;
            while m.is_multiple_of(p) {
                m /= p;
                q *= p;
            }
            lengths.push(q);
        }
        p += 1;
    }
    let degree = lengths.iter().sum();
    let mut cycles = Vec::new();
    let mut start = 0;
    for len in lengths {
        cycles.push((start..start + len).collect());
        start += len;
    }
    Permutation::from_cycles(degree, &cycles).expect("disjoint cycles")
}

/// Left-regular representation of `i` and `j` in Q8. Elements are indexed
/// `2u + s` for unit `u ∈ {1, i, j, k}` and sign bit `s`.
fn quaternion_generators() -> (Permutation, Permutation) {
    // unit products: table[a][b] = (sign, unit) of u_a · u_b
    const TABLE: [[(u8, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let left = |unit: usize| {
        let images = (0..8)
            .map(|x| {
                let (u, s) = (x / 2, x % 2);
                let (sign, w) = TABLE[unit][u];
                2 * w + ((s as u8 ^ sign) as usize)
            })
            .collect();
        Permutation::from_images(images).expect("left multiplication is bijective")
    };
    (left(1), left(2))
}

/// `s⁻¹ r s = r⁻¹`, the dihedral relation (equal to `r⁵` at order 12).
fn check_dihedral_relation(g: &GroupTable, n: usize) {
    let r = g.generators()[0];
    let s = g.generators()[1];
    assert_eq!(g.element_order(r), n);
    assert_eq!(g.element_order(s), 2);
    assert_eq!(g.conj(r, s), g.inv(r), "dihedral relation fails");
    assert_eq!(g.conj(r, s), g.pow(r, n - 1));
}

/// A built group with its named generators.
#[derive(Debug, Clone)]
pub struct BuiltGroup {
    pub name: String,
    pub table: Arc<GroupTable>,
    pub named: Vec<(String, usize)>,
}

impl BuiltGroup {
    /// Builds a group from raw generators, named `g1`, `g2`, ... as for
    /// group files.
    pub fn from_generators(
        name: &str,
        gens: &[Permutation],
        limits: &Limits,
    ) -> Result<BuiltGroup> {
        let first = gens.first().ok_or(Error::NoGenerators)?;
        limits.check_degree(first.degree())?;
        let table = GroupTable::closure(gens, limits.max_order)?;
        let named = (1..)
            .map(|k| format!("g{k}"))
            .zip(table.generators().iter().copied())
            .collect();
        Ok(BuiltGroup {
            name: name.to_string(),
            table: Arc::new(table),
            named,
        })
    }

    pub fn generator(&self, name: &str) -> Option<usize> {
        self.named.iter().find(|(n, _)| n == name).map(|&(_, i)| i)
    }

    /// Parses one element: either 1-based point cycles such as `(1 2)(3 4)`,
    /// or words over the named generators such as `(s r)` or `r^2`, where
    /// consecutive groups multiply left to right. Outer parentheses are
    /// optional.
    pub fn parse_element(&self, text: &str) -> Result<usize> {
        let g = &self.table;
        let trimmed = text.trim();
        let wrapped;
        let text = if trimmed.is_empty() || trimmed.starts_with('(') {
            text
        } else {
            wrapped = format!("({trimmed})");
            &wrapped
        };
        let groups = parse_paren_groups(text)?;
        let numeric = groups
            .iter()
            .flatten()
            .all(|t| t.chars().all(|c| c.is_ascii_digit()));
        if numeric {
            let p = Permutation::parse_cycles(text, g.degree())?;
            return g.element_index(&p)?.ok_or(Error::NotInGroup);
        }
        let mut acc = 0;
        for token in groups.iter().flatten() {
            let (name, power) = match token.split_once('^') {
                Some((n, e)) => {
                    let e: i64 = e
                        .parse()
                        .map_err(|_| Error::parse(1, format!("bad exponent in `{token}`")))?;
                    (n, e)
                }
                None => (token.as_str(), 1),
            };
            let x = self.generator(name).ok_or_else(|| {
                Error::parse(1, format!("unknown generator `{name}` in {}", self.name))
            })?;
            let base = if power < 0 { g.inv(x) } else { x };
            acc = g.mul(acc, g.pow(base, power.unsigned_abs() as usize));
        }
        Ok(acc)
    }

    /// Parses a list of elements separated by `;`.
    pub fn parse_elements(&self, text: &str) -> Result<Vec<usize>> {
        text.split(';')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| self.parse_element(s))
            .collect()
    }
}

/// Parses the group file format:
///
/// ```text
/// # comment
/// degree 4
/// gen (1 2 3)
/// gen (1 2)(3 4)
/// ```
pub fn parse_group_file(text: &str) -> Result<Vec<Permutation>> {
    let mut degree = None;
    let mut gens = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match (keyword, degree) {
            ("degree", None) => {
                let d: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("bad degree `{}`", rest.trim())))?;
                if d == 0 {
                    return Err(Error::parse(line_no, "degree must be positive"));
                }
                degree = Some(d);
            }
            ("degree", Some(_)) => return Err(Error::parse(line_no, "duplicate degree line")),
            ("gen", Some(d)) => {
                let p = Permutation::parse_cycles(rest, d).map_err(|e| match e {
                    Error::Parse { message, .. } => Error::parse(line_no, message),
                    Error::NotBijective(msg) => {
                        Error::parse(line_no, format!("non-bijective cycles: {msg}"))
                    }
                    other => other,
                })?;
                gens.push(p);
            }
            ("gen", None) => return Err(Error::parse(line_no, "`degree` must come first")),
            _ => {
                return Err(Error::parse(
                    line_no,
                    format!("unknown keyword `{keyword}`"),
                ))
            }
        }
    }
    let degree = degree.ok_or_else(|| Error::parse(1, "missing `degree` line"))?;
    if gens.is_empty() {
        gens.push(Permutation::identity(degree));
    }
    Ok(gens)
}

pub fn read_group_file(path: &Path) -> Result<Vec<Permutation>> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_group_file(&text)
}

/// The survey corpus up to `max_order`, sorted by order then name: cyclic
/// and dihedral groups, S3, S4, A4, A5, Q8, the elementary abelian 2-groups
/// of order 4 to 16, and direct products of two nontrivial base groups.
pub fn survey_corpus(max_order: usize) -> Vec<GroupSpec> {
    let mut base: Vec<GroupSpec> = Vec::new();
    base.extend((2..=max_order).map(GroupSpec::cyclic));
    base.extend((4..=max_order).step_by(2).map(GroupSpec::dihedral));
    base.extend([
        GroupSpec::symmetric(3),
        GroupSpec::symmetric(4),
        GroupSpec::alternating(4),
        GroupSpec::alternating(5),
        GroupSpec::quaternion8(),
    ]);
    let c2 = GroupSpec::cyclic(2);
    let mut elementary = GroupSpec::direct_product(c2.clone(), c2.clone());
    for _ in 0..3 {
        base.push(elementary.clone());
        elementary = GroupSpec::direct_product(elementary, c2.clone());
    }
    base.retain(|s| s.expected_order().is_some_and(|o| o <= max_order));

    let mut corpus = vec![GroupSpec::cyclic(1)];
    corpus.extend(base.iter().cloned());
    for (i, a) in base.iter().enumerate() {
        for b in &base[i..] {
            let order = a.expected_order().unwrap() * b.expected_order().unwrap();
            if order <= max_order {
                corpus.push(GroupSpec::direct_product(a.clone(), b.clone()));
            }
        }
    }
    corpus.sort_by(|a, b| (a.expected_order(), &a.name).cmp(&(b.expected_order(), &b.name)));
    corpus.dedup_by(|a, b| a.name == b.name);
    corpus
}
