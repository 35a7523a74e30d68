//! Seeded generators for configurations, group elements and parameters.

use fivepoint::{Family, Matrix, ParamKind, Parameter, ProjConfig, Rational, Scalar};
use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// A small rational, integer most of the time.
pub fn rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    let num = rng.gen_range(-bound..=bound);
    if rng.gen_bool(0.7) {
        Rational::from_int(num)
    } else {
        Rational::from_ratio(num, rng.gen_range(1..=bound))
    }
}

pub fn nonzero_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    loop {
        let x = rational(rng, bound);
        if !x.is_zero() {
            return x;
        }
    }
}

/// A uniformly drawn invertible `n x n` matrix with small entries.
pub fn invertible<R: Rng>(rng: &mut R, n: usize) -> Matrix<Rational> {
    loop {
        let rows = (0..n).map(|_| (0..n).map(|_| rational(rng, 5)).collect()).collect();
        let g = Matrix::from_rows(rows).expect("square");
        if g.rank() == n {
            return g;
        }
    }
}

/// `g * v` with every column rescaled by a random nonzero factor.
pub fn translate<R: Rng>(rng: &mut R, v: &ProjConfig<Rational>) -> ProjConfig<Rational> {
    let g = invertible(rng, v.n());
    let moved = v.transform(&g).expect("square matrix of matching size");
    let columns = moved
        .columns()
        .iter()
        .map(|c| {
            let s = nonzero_rational(rng, 7);
            c.iter().map(|x| x.clone() * s.clone()).collect()
        })
        .collect();
    ProjConfig::new(v.n(), columns).expect("scaling keeps columns nonzero")
}

/// A configuration whose points are combinations of a random number of random vectors,
/// with sparse coefficients so that coincidences and dependencies are frequent.
pub fn config<R: Rng>(rng: &mut R, n: usize, m: usize) -> ProjConfig<Rational> {
    let r = rng.gen_range(1..=n);
    let basis: Vec<Vec<Rational>> = loop {
        let basis: Vec<Vec<Rational>> = (0..r).map(|_| (0..n).map(|_| rational(rng, 3)).collect()).collect();
        if Matrix::from_columns(n, &basis).expect("columns have length n").rank() == r {
            break basis;
        }
    };
    loop {
        let columns: Vec<Vec<Rational>> = (0..m)
            .map(|_| {
                let coeffs: Vec<Rational> =
                    (0..r).map(|_| if rng.gen_bool(0.4) { Rational::from_int(0) } else { rational(rng, 3) }).collect();
                (0..n)
                    .map(|k| {
                        coeffs
                            .iter()
                            .zip(&basis)
                            .fold(Rational::from_int(0), |acc, (c, b)| acc + c.clone() * b[k].clone())
                    })
                    .collect()
            })
            .collect();
        if let Ok(v) = ProjConfig::new(n, columns) {
            return v;
        }
    }
}

/// A point of the generic locus for the given parameter kind.
pub fn generic_parameter<R: Rng>(rng: &mut R, kind: ParamKind) -> Parameter<Rational> {
    let point = |rng: &mut R, len: usize| -> Vec<Rational> { (0..len).map(|_| nonzero_rational(rng, 9)).collect() };
    loop {
        let candidate = match kind {
            ParamKind::Line => Parameter::line(point(rng, 2)),
            ParamKind::Plane => Parameter::plane(point(rng, 3)),
            ParamKind::LinePair => Parameter::line_pair(point(rng, 2), point(rng, 2)),
        }
        .expect("nonzero coordinates");
        if candidate.is_generic() {
            return candidate;
        }
    }
}

/// The representative of `family` at a random generic parameter.
pub fn representative<R: Rng>(rng: &mut R, family: &Family) -> (Option<Parameter<Rational>>, ProjConfig<Rational>) {
    let param = family.parameter_kind().map(|k| generic_parameter(rng, k));
    let v = family.representative(param.as_ref()).expect("generic parameters are accepted");
    (param, v)
}
