//! Orbit classification for five points in projective 3-space.

use serde::{Serialize, Serializer};

use crate::enumeration::catalogue;
use crate::error::{Error, Result};
use crate::exact_linalg::{coordinates_in_span, normalize, Matrix, ProjConfig};
use crate::family::{check_parameter, Family, Parameter};
use crate::rank_matrix::{compute_rank_matrix, RankMatrix};
use crate::scalar::Scalar;
use crate::splitting::Splitting;

/// Canonical name of an orbit: its fibre, its family member and, for the five
/// parametrized families, the moduli parameter read in the standard frame.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrbitClass<T> {
    rank_matrix: RankMatrix,
    family: Family,
    parameter: Option<Parameter<T>>,
    frame: Vec<usize>,
}

impl<T: Scalar> OrbitClass<T> {
    /// The orbit of `family` with the given parameter, which must be present exactly for
    /// parametrized families and lie in the generic locus.
    pub fn new(family: Family, parameter: Option<Parameter<T>>) -> Result<Self> {
        check_parameter(&family, parameter.as_ref())?;
        if let Family::Split(s) = &family {
            if !s.pprime_membership(4) || s.m() != 5 {
                return Err(Error::UnknownFamily(family.to_string()));
            }
        }
        Ok(OrbitClass { rank_matrix: family.rank_matrix(), frame: family.frame(), family, parameter })
    }

    pub fn rank_matrix(&self) -> &RankMatrix {
        &self.rank_matrix
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn parameter(&self) -> Option<&Parameter<T>> {
        self.parameter.as_ref()
    }

    /// Index correspondence: canonical position `k` is point `frame[k]`.
    pub fn frame(&self) -> &[usize] {
        &self.frame
    }

    pub fn splitting(&self) -> Splitting {
        self.rank_matrix.rho()
    }

    pub fn type_label(&self) -> String {
        self.rank_matrix.type_label()
    }

    pub fn is_parametrized(&self) -> bool {
        self.parameter.is_some()
    }

    /// A configuration in this orbit.
    pub fn representative(&self) -> ProjConfig<T> {
        self.family.representative(self.parameter.as_ref()).expect("orbit classes hold checked parameters")
    }
}

impl<T: Scalar> Serialize for OrbitClass<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(bound = "")]
        struct Record<'a, T: Scalar> {
            rank_type: String,
            splitting: Splitting,
            splitting_type: String,
            family: &'a Family,
            parameter: Option<&'a Parameter<T>>,
            frame: Vec<usize>,
        }
        let splitting = self.splitting();
        Record {
            rank_type: self.type_label(),
            splitting_type: splitting.splitting_type().to_string(),
            splitting,
            family: &self.family,
            parameter: self.parameter.as_ref(),
            frame: self.frame.iter().map(|i| i + 1).collect(),
        }
        .serialize(serializer)
    }
}

fn check_shape<T: Scalar>(v: &ProjConfig<T>) -> Result<()> {
    if v.n() != 4 || v.m() != 5 {
        return Err(Error::UnsupportedShape { n: v.n(), m: v.m() });
    }
    Ok(())
}

/// Ratios `target_i / unit_i`: coordinates after rescaling the basis so `unit` becomes the all-ones vector.
fn relative<T: Scalar>(unit: &[T], target: &[T]) -> Vec<T> {
    unit.iter().zip(target).map(|(u, t)| t.clone() / u.clone()).collect()
}

fn extract<T: Scalar>(family: &Family, w: &ProjConfig<T>) -> Result<Parameter<T>> {
    let coords = |basis: &[usize], target| coordinates_in_span(w, basis, target);
    match (family.canonical(), family.parameter_kind()) {
        (Family::Rank3, _) => {
            let p = relative(&coords(&[0, 1, 2], 3)?, &coords(&[0, 1, 2], 4)?);
            Parameter::plane(p)
        }
        (Family::Rank3Line(_), _) => {
            let p = relative(&coords(&[0, 1, 2], 3)?, &coords(&[0, 1, 2], 4)?);
            debug_assert!(p[2].is_zero());
            Parameter::line(p[..2].to_vec())
        }
        (Family::Rank2, _) => {
            let unit = coords(&[0, 1], 2)?;
            Parameter::line_pair(relative(&unit, &coords(&[0, 1], 3)?), relative(&unit, &coords(&[0, 1], 4)?))
        }
        (Family::Rank2Double(_), _) => Parameter::line(relative(&coords(&[0, 1], 2)?, &coords(&[0, 1], 3)?)),
        (Family::PointLine(_), _) => Parameter::line(relative(&coords(&[1, 2], 3)?, &coords(&[1, 2], 4)?)),
        (_, kind) => unreachable!("family {family} with parameter kind {kind:?} has no extraction rule"),
    }
}

/// The orbit class of a configuration of five points in projective 3-space.
pub fn classify<T: Scalar>(v: &ProjConfig<T>) -> Result<OrbitClass<T>> {
    check_shape(v)?;
    let phi = compute_rank_matrix(v);
    let entry = catalogue().entry(&phi)?;
    let parameter = match entry.family.parameter_kind() {
        None => None,
        Some(_) => Some(extract(&entry.family, &v.reorder(&entry.frame))?),
    };
    if let Some(p) = &parameter {
        if !p.is_generic() {
            return Err(Error::NonGenericParameter(p.to_string()));
        }
    }
    Ok(OrbitClass { rank_matrix: phi, family: entry.family.clone(), parameter, frame: entry.frame.clone() })
}

/// Whether two configurations of five points lie in the same orbit.
pub fn same_orbit<T: Scalar>(v: &ProjConfig<T>, w: &ProjConfig<T>) -> Result<bool> {
    Ok(classify(v)? == classify(w)?)
}

/// Dimension of the orbit: the rank of `A -> (A v_i mod v_i)_i` on `n x n` matrices.
pub fn orbit_dimension<T: Scalar>(v: &ProjConfig<T>) -> usize {
    let n = v.n();
    let mut action = Matrix::zeros(v.m() * (n - 1), n * n);
    for i in 0..v.m() {
        let point = normalize(v.column(i));
        let pivot = point.iter().position(|x| !x.is_zero()).expect("columns are nonzero");
        for a in 0..n {
            for b in 0..n {
                for (row, c) in (0..n).filter(|&c| c != pivot).enumerate() {
                    let shifted = usize::from(a == c);
                    let value = if a == pivot {
                        point[b].clone() * (T::from_int(shifted as i64) - point[c].clone())
                    } else {
                        point[b].clone() * T::from_int(shifted as i64)
                    };
                    action.set(i * (n - 1) + row, a * n + b, value);
                }
            }
        }
    }
    action.rank()
}
