//! The orbit families of five points in projective 3-space.
//!
//! Every rank matrix of the (4, 5) case is either determined by its splitting
//! (the [`Family::Split`] rows) or belongs to one of ten named families whose
//! splitting alone does not pin down the fibre.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact_linalg::{normalize, ProjConfig};
use crate::rank_matrix::RankMatrix;
use crate::scalar::{parse_scalar, Scalar};
use crate::splitting::{Block, Splitting};
use crate::subset::Subset;

const M: usize = 5;
const N: usize = 4;

/// A fibre family, with the point indices that distinguish its members.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Fibre determined by a splitting in P'.
    Split(Splitting),
    /// `φ[5^3]`: five points spanning a plane, no three collinear.
    Rank3,
    /// `φ[5^3;J]`, `#J = 3`: the points of `J` are collinear.
    Rank3Line(Subset),
    /// `φ[5^3;J1,J2]`: the complements of `J1` and `J2` are collinear triples.
    Rank3TwoLines(Subset, Subset),
    /// `φ[5^3;J]`, `#J = 2`: the points of `J` coincide.
    Rank3Double(Subset),
    /// `φ[5^2]`: five distinct points on a line.
    Rank2,
    /// `φ[5^2;J]`, `#J = 2`.
    Rank2Double(Subset),
    /// `φ[5^2;J1,J2]`.
    Rank2TwoDoubles(Subset, Subset),
    /// `φ[5^2;J]`, `#J = 3`.
    Rank2Triple(Subset),
    /// `φ[4^2;i]`: point `i` off a line carrying four distinct points.
    PointLine(usize),
    /// `φ[4^2;i;J]`: as above with the points of `J` coinciding.
    PointLineDouble(usize, Subset),
}

/// Which projective moduli space a family's parameter lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParamKind {
    Line,
    Plane,
    LinePair,
}

impl ParamKind {
    pub fn description(self) -> &'static str {
        match self {
            ParamKind::Line => "a point of (P^1)'",
            ParamKind::Plane => "a point of (P^2)'",
            ParamKind::LinePair => "a point of (P^1 x P^1)'",
        }
    }
}

fn classes_hit(s: Subset, merged: &[Subset]) -> usize {
    let loose = merged.iter().fold(s, |acc, j| acc.difference(*j)).len();
    loose + merged.iter().filter(|j| !s.intersection(**j).is_empty()).count()
}

impl Family {
    /// Every member of every named family, in a fixed order.
    pub fn named_instances() -> Vec<Family> {
        let pairs: Vec<Subset> = (0..M).tuple_combinations().map(|(a, b)| Subset::from_indices([a, b])).collect();
        let triples: Vec<Subset> =
            (0..M).tuple_combinations().map(|(a, b, c)| Subset::from_indices([a, b, c])).collect();
        let disjoint_pairs: Vec<(Subset, Subset)> = pairs
            .iter()
            .tuple_combinations()
            .filter(|(a, b)| a.intersection(**b).is_empty())
            .map(|(a, b)| if a <= b { (*a, *b) } else { (*b, *a) })
            .collect();
        let mut out = vec![Family::Rank3];
        out.extend(triples.iter().map(|&j| Family::Rank3Line(j)));
        out.extend(disjoint_pairs.iter().map(|&(a, b)| Family::Rank3TwoLines(a, b)));
        out.extend(pairs.iter().map(|&j| Family::Rank3Double(j)));
        out.push(Family::Rank2);
        out.extend(pairs.iter().map(|&j| Family::Rank2Double(j)));
        out.extend(disjoint_pairs.iter().map(|&(a, b)| Family::Rank2TwoDoubles(a, b)));
        out.extend(triples.iter().map(|&j| Family::Rank2Triple(j)));
        out.extend((0..M).map(Family::PointLine));
        for i in 0..M {
            out.extend(pairs.iter().filter(|j| !j.contains(i)).map(|&j| Family::PointLineDouble(i, j)));
        }
        out
    }

    /// The rank matrix shared by every configuration of the family.
    pub fn rank_matrix(&self) -> RankMatrix {
        let full = Subset::full(M);
        match self {
            Family::Split(s) => s.sum_of_uniform(),
            Family::Rank3 => RankMatrix::from_fn_unchecked(M, |s| s.len().min(3)),
            Family::Rank3Line(j) => RankMatrix::from_fn_unchecked(M, |s| if s == *j { 2 } else { s.len().min(3) }),
            Family::Rank3TwoLines(a, b) => RankMatrix::from_fn_unchecked(M, |s| {
                if s == full.difference(*a) || s == full.difference(*b) {
                    2
                } else {
                    s.len().min(3)
                }
            }),
            Family::Rank3Double(j) => RankMatrix::from_fn_unchecked(M, |s| classes_hit(s, &[*j]).min(3)),
            Family::Rank2 => RankMatrix::from_fn_unchecked(M, |s| s.len().min(2)),
            Family::Rank2Double(j) | Family::Rank2Triple(j) => {
                RankMatrix::from_fn_unchecked(M, |s| classes_hit(s, &[*j]).min(2))
            }
            Family::Rank2TwoDoubles(a, b) => RankMatrix::from_fn_unchecked(M, |s| classes_hit(s, &[*a, *b]).min(2)),
            Family::PointLine(i) => {
                RankMatrix::from_fn_unchecked(M, |s| usize::from(s.contains(*i)) + s.without(*i).len().min(2))
            }
            Family::PointLineDouble(i, j) => RankMatrix::from_fn_unchecked(M, |s| {
                usize::from(s.contains(*i)) + classes_hit(s.without(*i), &[*j]).min(2)
            }),
        }
    }

    /// The member of the family whose representative is written in the standard frame.
    pub fn canonical(&self) -> Family {
        let s = |labels: &[usize]| Subset::from_labels(labels.iter().copied());
        match self {
            Family::Split(_) | Family::Rank3 | Family::Rank2 => self.clone(),
            Family::Rank3Line(_) => Family::Rank3Line(s(&[1, 2, 5])),
            Family::Rank3TwoLines(..) => Family::Rank3TwoLines(s(&[1, 2]), s(&[3, 4])),
            Family::Rank3Double(_) => Family::Rank3Double(s(&[1, 5])),
            Family::Rank2Double(_) => Family::Rank2Double(s(&[4, 5])),
            Family::Rank2TwoDoubles(..) => Family::Rank2TwoDoubles(s(&[1, 4]), s(&[2, 5])),
            Family::Rank2Triple(_) => Family::Rank2Triple(s(&[1, 4, 5])),
            Family::PointLine(_) => Family::PointLine(0),
            Family::PointLineDouble(..) => Family::PointLineDouble(0, s(&[2, 5])),
        }
    }

    pub fn parameter_kind(&self) -> Option<ParamKind> {
        match self {
            Family::Rank3 => Some(ParamKind::Plane),
            Family::Rank2 => Some(ParamKind::LinePair),
            Family::Rank3Line(_) | Family::Rank2Double(_) | Family::PointLine(_) => Some(ParamKind::Line),
            _ => None,
        }
    }

    /// Whether each fibre of this family is a single orbit.
    pub fn is_single_orbit(&self) -> bool {
        self.parameter_kind().is_none()
    }

    /// Lexicographically smallest index map `σ` (canonical position `k` goes to point `σ[k]`)
    /// carrying the canonical member's rank matrix onto this member's.
    pub fn frame(&self) -> Vec<usize> {
        let target = self.rank_matrix();
        let canonical = self.canonical().rank_matrix();
        (0..M)
            .permutations(M)
            .find(|sigma| canonical.relabel(sigma) == target)
            .expect("family members are permutations of the canonical member")
    }

    /// Representative of the canonical member, with `param` (when required) in the standard frame.
    pub fn canonical_representative<T: Scalar>(&self, param: Option<&Parameter<T>>) -> Result<ProjConfig<T>> {
        check_parameter(self, param)?;
        if let Family::Split(s) = self {
            return s.representative(N, &[]);
        }
        let points = param.map(Parameter::points).unwrap_or_default();
        ProjConfig::new(N, self.canonical_columns(&points))
    }

    /// Columns of the canonical representative for arbitrary (possibly degenerate) parameter points.
    ///
    /// Split families take no points; the other families ignore points they do not use.
    pub fn canonical_columns<T: Scalar>(&self, points: &[&[T]]) -> Vec<Vec<T>> {
        let e = |i: usize| -> Vec<T> { (0..N).map(|k| if k + 1 == i { T::one() } else { T::zero() }).collect() };
        let add = |a: &[T], b: &[T]| -> Vec<T> { a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect() };
        let point = |k: usize| -> Vec<T> {
            let mut v = vec![T::zero(); N];
            v[..points[k].len()].clone_from_slice(&normalize(points[k]));
            v
        };
        let e12 = add(&e(1), &e(2));
        let e123 = add(&e12, &e(3));
        match self.canonical() {
            Family::Split(s) => s.representative(N, &[]).expect("P' splittings need no parameters").columns().to_vec(),
            Family::Rank3 | Family::Rank3Line(_) => vec![e(1), e(2), e(3), e123, point(0)],
            Family::Rank3TwoLines(..) => vec![e(1), e(2), e(3), e123, e12],
            Family::Rank3Double(_) => vec![e(1), e(2), e(3), e123, e(1)],
            Family::Rank2 => vec![e(1), e(2), e12, point(0), point(1)],
            Family::Rank2Double(_) => vec![e(1), e(2), e12, point(0), point(0)],
            Family::Rank2TwoDoubles(..) => vec![e(1), e(2), e12, e(1), e(2)],
            Family::Rank2Triple(_) => vec![e(1), e(2), e12, e(1), e(1)],
            Family::PointLine(_) => vec![e(3), e(1), e(2), e12, point(0)],
            Family::PointLineDouble(..) => vec![e(3), e(1), e(2), e12, e(1)],
        }
    }

    /// Representative of this member: the canonical representative moved along [`Family::frame`].
    pub fn representative<T: Scalar>(&self, param: Option<&Parameter<T>>) -> Result<ProjConfig<T>> {
        let canonical = self.canonical_representative(param)?;
        let sigma = self.frame();
        let mut inverse = vec![0; M];
        for (k, &s) in sigma.iter().enumerate() {
            inverse[s] = k;
        }
        Ok(canonical.reorder(&inverse))
    }

    /// The family notation with `phi` spelled out.
    pub fn tag(&self) -> String {
        self.to_string()
    }
}

/// Checks that `param` matches the family's parameter kind and lies in the generic locus.
pub fn check_parameter<T: Scalar>(family: &Family, param: Option<&Parameter<T>>) -> Result<()> {
    match (family.parameter_kind(), param) {
        (None, None) => Ok(()),
        (None, Some(_)) => Err(Error::UnparametrizedFamily(family.to_string())),
        (Some(kind), None) => Err(Error::ParameterArity { expected: kind.arity(), found: 0 }),
        (Some(kind), Some(p)) if p.kind() != kind => {
            Err(Error::ParameterArity { expected: kind.arity(), found: p.kind().arity() })
        }
        (Some(_), Some(p)) if !p.is_generic() => Err(Error::NonGenericParameter(p.to_string())),
        _ => Ok(()),
    }
}

impl ParamKind {
    /// Number of projective points making up the parameter.
    pub fn arity(self) -> usize {
        match self {
            ParamKind::LinePair => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Split(s) => write!(f, "{s}"),
            Family::Rank3 => write!(f, "phi[5^3]"),
            Family::Rank3Line(j) | Family::Rank3Double(j) => write!(f, "phi[5^3;{j}]"),
            Family::Rank3TwoLines(a, b) => write!(f, "phi[5^3;{a},{b}]"),
            Family::Rank2 => write!(f, "phi[5^2]"),
            Family::Rank2Double(j) | Family::Rank2Triple(j) => write!(f, "phi[5^2;{j}]"),
            Family::Rank2TwoDoubles(a, b) => write!(f, "phi[5^2;{a},{b}]"),
            Family::PointLine(i) => write!(f, "phi[4^2;{}]", i + 1),
            Family::PointLineDouble(i, j) => write!(f, "phi[4^2;{};{j}]", i + 1),
        }
    }
}

/// Parses `{1,2},{3,4}` into subsets, checking labels are within `[5]`.
fn parse_sets(text: &str) -> Option<Vec<Subset>> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('{')?;
        let close = body.find('}')?;
        let labels: Vec<usize> = if body[..close].trim().is_empty() {
            Vec::new()
        } else {
            body[..close].split(',').map(|x| x.trim().parse().ok()).collect::<Option<_>>()?
        };
        if labels.iter().any(|&l| l == 0 || l > M) || labels.iter().duplicates().next().is_some() {
            return None;
        }
        out.push(Subset::from_labels(labels));
        rest = body[close + 1..].trim_start();
        rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
    }
    Some(out)
}

fn parse_splitting(text: &str) -> Option<Splitting> {
    let inner = text.trim().strip_prefix('{')?.strip_suffix('}')?;
    let mut blocks = Vec::new();
    let mut rest = inner.trim();
    while !rest.is_empty() {
        let close = rest.find('}')?;
        let set = parse_sets(&rest[..=close])?.pop()?;
        let after = rest[close + 1..].trim_start().strip_prefix('^')?;
        let digits = after.find(|c: char| !c.is_ascii_digit()).unwrap_or(after.len());
        blocks.push(Block::new(set, after[..digits].parse().ok()?));
        rest = after[digits..].trim_start();
        rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
    }
    Splitting::new(M, blocks).ok()
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let unknown = || Error::UnknownFamily(text.to_string());
        let trimmed = text.trim();
        if trimmed.starts_with("{{") {
            let s = parse_splitting(trimmed).ok_or_else(unknown)?;
            if !s.pprime_membership(N) {
                return Err(unknown());
            }
            return Ok(Family::Split(s));
        }
        let body = trimmed
            .strip_prefix("phi[")
            .or_else(|| trimmed.strip_prefix("φ["))
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(unknown)?;
        let (head, tail) = match body.split_once(';') {
            Some((h, t)) => (h.trim(), Some(t.trim())),
            None => (body.trim(), None),
        };
        let ordered = |a: Subset, b: Subset| if a <= b { (a, b) } else { (b, a) };
        let family = match (head, tail) {
            ("5^3", None) => Family::Rank3,
            ("5^2", None) => Family::Rank2,
            ("4^2", Some(t)) => {
                let (i, j) = match t.split_once(';') {
                    Some((i, j)) => (i, Some(j)),
                    None => (t, None),
                };
                let i: usize = i.trim().parse().map_err(|_| unknown())?;
                if i == 0 || i > M {
                    return Err(unknown());
                }
                match j.map(parse_sets) {
                    None => Family::PointLine(i - 1),
                    Some(Some(sets)) if sets.len() == 1 && sets[0].len() == 2 && !sets[0].contains(i - 1) => {
                        Family::PointLineDouble(i - 1, sets[0])
                    }
                    _ => return Err(unknown()),
                }
            }
            (rank @ ("5^3" | "5^2"), Some(t)) => {
                let sets = parse_sets(t).ok_or_else(unknown)?;
                let three = rank == "5^3";
                match sets.as_slice() {
                    [j] if j.len() == 3 && three => Family::Rank3Line(*j),
                    [j] if j.len() == 2 && three => Family::Rank3Double(*j),
                    [j] if j.len() == 2 => Family::Rank2Double(*j),
                    [j] if j.len() == 3 => Family::Rank2Triple(*j),
                    [a, b] if a.len() == 2 && b.len() == 2 && a.intersection(*b).is_empty() => {
                        let (a, b) = ordered(*a, *b);
                        if three {
                            Family::Rank3TwoLines(a, b)
                        } else {
                            Family::Rank2TwoDoubles(a, b)
                        }
                    }
                    _ => return Err(unknown()),
                }
            }
            _ => return Err(unknown()),
        };
        Ok(family)
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Family {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A moduli parameter in normalized homogeneous coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Parameter<T> {
    Line(Vec<T>),
    Plane(Vec<T>),
    LinePair(Vec<T>, Vec<T>),
}

fn projective_point<T: Scalar>(coords: Vec<T>, len: usize) -> Result<Vec<T>> {
    if coords.len() != len || coords.iter().all(T::is_zero) {
        return Err(Error::InvalidParameter(format_point(&coords), len));
    }
    Ok(normalize(&coords))
}

fn format_point<T: Scalar>(p: &[T]) -> String {
    format!("[{}]", p.iter().map(ToString::to_string).join(":"))
}

/// Parses `[a:b]` or `[a:b:c]` with exact rational coordinates.
pub fn parse_point<T: Scalar>(text: &str) -> Result<Vec<T>> {
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("`{text}` is not a projective point like [1:2]")))?;
    inner.split(':').map(|x| parse_scalar(x).map_err(|e| Error::Parse(e.to_string()))).collect()
}

impl<T: Scalar> Parameter<T> {
    pub fn line(p: Vec<T>) -> Result<Self> {
        Ok(Parameter::Line(projective_point(p, 2)?))
    }

    pub fn plane(p: Vec<T>) -> Result<Self> {
        Ok(Parameter::Plane(projective_point(p, 3)?))
    }

    pub fn line_pair(p: Vec<T>, q: Vec<T>) -> Result<Self> {
        Ok(Parameter::LinePair(projective_point(p, 2)?, projective_point(q, 2)?))
    }

    pub fn from_ints(points: &[&[i64]]) -> Result<Self> {
        let conv = |p: &[i64]| p.iter().map(|&x| T::from_int(x)).collect::<Vec<T>>();
        match points {
            [p] if p.len() == 2 => Self::line(conv(p)),
            [p] if p.len() == 3 => Self::plane(conv(p)),
            [p, q] => Self::line_pair(conv(p), conv(q)),
            _ => Err(Error::ParameterArity { expected: 1, found: points.len() }),
        }
    }

    /// Parses one or two strings like `[1:2:3]`.
    pub fn parse(points: &[String]) -> Result<Self> {
        let parsed: Vec<Vec<T>> = points.iter().map(|p| parse_point(p)).collect::<Result<_>>()?;
        match parsed.as_slice() {
            [p] if p.len() == 3 => Self::plane(p.clone()),
            [p] => Self::line(p.clone()),
            [p, q] => Self::line_pair(p.clone(), q.clone()),
            _ => Err(Error::ParameterArity { expected: 1, found: parsed.len() }),
        }
    }

    pub fn kind(&self) -> ParamKind {
        match self {
            Parameter::Line(_) => ParamKind::Line,
            Parameter::Plane(_) => ParamKind::Plane,
            Parameter::LinePair(..) => ParamKind::LinePair,
        }
    }

    /// Membership in the open dense locus excluding coordinate coincidences.
    pub fn is_generic(&self) -> bool {
        let line = |p: &[T]| !p[0].is_zero() && !p[1].is_zero() && p[0] != p[1];
        match self {
            Parameter::Line(p) => line(p),
            Parameter::Plane(p) => p.iter().all(|x| !x.is_zero()) && p[0] != p[1] && p[1] != p[2] && p[2] != p[0],
            Parameter::LinePair(p, q) => line(p) && line(q) && p != q,
        }
    }

    pub fn points(&self) -> Vec<&[T]> {
        match self {
            Parameter::Line(p) | Parameter::Plane(p) => vec![p],
            Parameter::LinePair(p, q) => vec![p, q],
        }
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.points().into_iter().map(format_point).collect()
    }
}

impl<T: Scalar> fmt::Display for Parameter<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parameter::LinePair(p, q) => write!(f, "({},{})", format_point(p), format_point(q)),
            Parameter::Line(p) | Parameter::Plane(p) => write!(f, "{}", format_point(p)),
        }
    }
}

impl<T: Scalar> Serialize for Parameter<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for Parameter<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Parameter::parse(&Vec::<String>::deserialize(deserializer)?).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rank_matrix::compute_rank_matrix;
    use crate::Rational;

    #[test]
    fn one_hundred_seven_named_instances() {
        let all = Family::named_instances();
        assert_eq!(all.len(), 107);
        let distinct: std::collections::HashSet<_> = all.iter().map(Family::rank_matrix).collect();
        assert_eq!(distinct.len(), 107);
        for f in &all {
            f.rank_matrix().check_invariants(Some(4)).unwrap();
        }
    }

    #[test]
    fn tags_round_trip() {
        for f in Family::named_instances() {
            assert_eq!(f.tag().parse::<Family>().unwrap(), f, "{f}");
        }
        assert_eq!("phi[5^3;{1,2,5}]".parse::<Family>().unwrap(), Family::Rank3Line(Subset::from_labels([1, 2, 5])));
        assert_eq!(Family::PointLineDouble(0, Subset::from_labels([2, 5])).tag(), "phi[4^2;1;{2,5}]");
        let s: Family = "{{1}^1,{2}^1,{3}^1,{4,5}^1}".parse().unwrap();
        assert_eq!(s.tag(), "{{1}^1,{2}^1,{3}^1,{4,5}^1}");
        assert!("phi[5^3;{1,6}]".parse::<Family>().is_err());
        assert!("{{1,2,3,4,5}^3}".parse::<Family>().is_err());
    }

    #[test]
    fn canonical_representatives_realize_their_rank_matrix() {
        let line = Parameter::<Rational>::from_ints(&[&[1, 2]]).unwrap();
        let plane = Parameter::<Rational>::from_ints(&[&[1, 2, 3]]).unwrap();
        let pair = Parameter::<Rational>::from_ints(&[&[1, 2], &[1, 3]]).unwrap();
        for f in Family::named_instances() {
            let param = match f.parameter_kind() {
                Some(ParamKind::Line) => Some(&line),
                Some(ParamKind::Plane) => Some(&plane),
                Some(ParamKind::LinePair) => Some(&pair),
                None => None,
            };
            let rep = f.canonical().canonical_representative(param).unwrap();
            assert_eq!(compute_rank_matrix(&rep), f.canonical().rank_matrix(), "{f}");
            assert_eq!(compute_rank_matrix(&f.representative(param).unwrap()), f.rank_matrix(), "{f}");
        }
    }

    #[test]
    fn generic_loci() {
        let line = |a, b| Parameter::<Rational>::from_ints(&[&[a, b]]).unwrap().is_generic();
        assert!(line(1, 2));
        assert!(!line(1, 1));
        assert!(!line(0, 1));
        assert!(!line(1, 0));
        let plane = |p: &[i64]| Parameter::<Rational>::from_ints(&[p]).unwrap().is_generic();
        assert!(plane(&[1, 2, 3]));
        assert!(!plane(&[1, 1, 1]));
        assert!(!plane(&[1, 2, 0]));
        assert!(!plane(&[2, 3, 2]));
        let pair = |p: &[i64], q: &[i64]| Parameter::<Rational>::from_ints(&[p, q]).unwrap().is_generic();
        assert!(pair(&[1, 2], &[1, 3]));
        assert!(!pair(&[1, 2], &[2, 4]));
    }

    #[test]
    fn parameters_print_and_parse() {
        let p = Parameter::<Rational>::from_ints(&[&[2, 4, 6]]).unwrap();
        assert_eq!(p.to_strings(), vec!["[1:2:3]"]);
        let back = Parameter::<Rational>::parse(&["[1:2:3]".to_string()]).unwrap();
        assert_eq!(back, p);
        let q = Parameter::<Rational>::parse(&["[3:1/2]".to_string(), "[1:3]".to_string()]).unwrap();
        assert_eq!(q.to_string(), "([1:1/6],[1:3])");
        assert!(Parameter::<Rational>::parse(&["[0:0]".to_string()]).is_err());
        assert!(Parameter::<Rational>::parse(&["[1:0.5]".to_string()]).is_err());
    }
}
