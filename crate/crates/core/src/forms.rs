//! Linear forms on n: supports, the Dyn(f) subdiagram, wd, the skew form B_f
//! and its rank, and the canonical decomposition into extensive pieces.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::dynkin::{self, Shape};
use crate::error::{Error, Result};
use crate::linalg;
use crate::rootset::RootSet;
use crate::rootsys::RootSystem;

/// Coefficient field of a form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

/// A linear form on n with sparse coefficients keyed by 0-based root index.
///
/// Zero coefficients are never stored, so structural equality is equality of forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    field: Field,
    coeffs: BTreeMap<usize, BigRational>,
}

impl LinearForm {
    pub fn zero(field: Field) -> Self {
        LinearForm { field, coeffs: BTreeMap::new() }
    }

    /// Rational form from (index, integer value) pairs.
    pub fn rational<I: IntoIterator<Item = (usize, i64)>>(values: I) -> Self {
        let mut f = Self::zero(Field::Rational);
        for (i, v) in values {
            f.set(i, BigRational::from_integer(v.into()));
        }
        f
    }

    /// Form over F_p from (index, value) pairs; values are reduced mod p.
    pub fn modular<I: IntoIterator<Item = (usize, i64)>>(p: u64, values: I) -> Self {
        let mut f = Self::zero(Field::Prime(p));
        for (i, v) in values {
            f.set(i, BigRational::from_integer(v.into()));
        }
        f
    }

    /// The dual basis vector e*_i.
    pub fn elementary(i: usize) -> Self {
        Self::rational([(i, 1)])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Set a coefficient, reducing mod p for prime fields.
    pub fn set(&mut self, i: usize, v: BigRational) {
        let v = match self.field {
            Field::Rational => v,
            Field::Prime(p) => {
                let p = BigInt::from(p);
                let num = v.numer().mod_floor(&p);
                let den = v.denom().mod_floor(&p);
                assert!(!den.is_zero(), "denominator divisible by p");
                let inv = den.modpow(&(&p - 2u32), &p);
                BigRational::from_integer((num * inv).mod_floor(&p))
            }
        };
        if v.is_zero() {
            self.coeffs.remove(&i);
        } else {
            self.coeffs.insert(i, v);
        }
    }

    pub fn get(&self, i: usize) -> BigRational {
        self.coeffs.get(&i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, BigRational> {
        &self.coeffs
    }

    /// Supp(f): indices with nonzero coefficient.
    pub fn support(&self) -> RootSet {
        self.coeffs.keys().copied().collect()
    }

    /// Restriction to a set of roots.
    pub fn restrict(&self, s: &RootSet) -> Self {
        LinearForm {
            field: self.field,
            coeffs: self.coeffs.iter().filter(|(i, _)| s.contains(**i)).map(|(i, v)| (*i, v.clone())).collect(),
        }
    }

    /// A random form with support exactly `s`: rational values are nonzero integers in [-bound, bound].
    pub fn random_on<R: Rng>(field: Field, s: &RootSet, bound: i64, rng: &mut R) -> Self {
        let mut f = Self::zero(field);
        for i in s.iter() {
            let v = match field {
                Field::Rational => {
                    let mag = rng.gen_range(1..=bound);
                    if rng.gen_bool(0.5) {
                        mag
                    } else {
                        -mag
                    }
                }
                Field::Prime(p) => rng.gen_range(1..p) as i64,
            };
            f.set(i, BigRational::from_integer(v.into()));
        }
        f
    }
}

/// Serializable form: `{field: "Q" | "Fp", p?: int, coeffs: {chevie_index: value}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormJson {
    pub field: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p: Option<u64>,
    pub coeffs: BTreeMap<usize, String>,
}

impl From<&LinearForm> for FormJson {
    fn from(f: &LinearForm) -> Self {
        let (field, p) = match f.field {
            Field::Rational => ("Q".to_string(), None),
            Field::Prime(p) => ("Fp".to_string(), Some(p)),
        };
        FormJson { field, p, coeffs: f.coeffs.iter().map(|(i, v)| (i + 1, v.to_string())).collect() }
    }
}

impl TryFrom<&FormJson> for LinearForm {
    type Error = Error;

    fn try_from(j: &FormJson) -> Result<Self> {
        let field = match (j.field.as_str(), j.p) {
            ("Q", None) => Field::Rational,
            ("Fp", Some(p)) if linalg::is_prime(p) => Field::Prime(p),
            _ => return Err(Error::Data(format!("bad field {:?}/{:?}", j.field, j.p))),
        };
        let mut f = LinearForm::zero(field);
        for (&c, v) in &j.coeffs {
            if c == 0 {
                return Err(Error::IndexOutOfRange { index: c, len: 0 });
            }
            let val: BigRational = v.parse().map_err(|_| Error::Data(format!("bad coefficient {v:?}")))?;
            f.set(c - 1, val);
        }
        Ok(f)
    }
}

/// NSupp(f): the order ideal generated by Supp(f).
pub fn nsupp(rs: &RootSystem, f: &LinearForm) -> RootSet {
    rs.ideal(&f.support())
}

/// One connected component of Dyn(f).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DynComponent {
    /// Simple-root indices (0-based root indices).
    pub vertices: Vec<usize>,
    pub shape: Shape,
}

/// The subdiagram Dyn(f) of f-adjacent simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DynSub {
    /// Edges as pairs of simple-root indices.
    pub edges: Vec<(usize, usize)>,
    pub components: Vec<DynComponent>,
    pub extensive: bool,
}

impl DynSub {
    /// Sum of wd over components.
    pub fn wd(&self) -> usize {
        self.components.iter().map(|c| c.shape.wd()).sum()
    }
}

/// Dyn(f) for the order ideal `ns` (normally NSupp(f)).
pub fn dyn_of_ideal(rs: &RootSystem, ns: &RootSet) -> DynSub {
    let spec = rs.spec();
    let bourbaki = rs.bourbaki_simple();
    let all_edges = dynkin::ambient_edges(spec.family, spec.rank);
    let present: Vec<(usize, usize)> = all_edges
        .iter()
        .copied()
        .filter(|&(a, b)| {
            rs.sum_index(bourbaki[a], bourbaki[b]).is_some_and(|s| ns.contains(s))
        })
        .collect();
    let components = dynkin::components(spec.rank, &present)
        .into_iter()
        .map(|vs| DynComponent {
            shape: dynkin::shape(spec.family, spec.rank, &vs),
            vertices: vs.iter().map(|&v| bourbaki[v]).collect(),
        })
        .collect();
    DynSub {
        extensive: present.len() == all_edges.len(),
        edges: present.iter().map(|&(a, b)| (bourbaki[a], bourbaki[b])).collect(),
        components,
    }
}

/// Dyn(f).
pub fn dyn_subdiagram(rs: &RootSystem, f: &LinearForm) -> DynSub {
    dyn_of_ideal(rs, &nsupp(rs, f))
}

/// wd(Dyn).
pub fn wd(d: &DynSub) -> usize {
    d.wd()
}

/// Whether f is extensive (Dyn(f) has every edge of the ambient diagram).
pub fn is_extensive(rs: &RootSystem, f: &LinearForm) -> bool {
    dyn_subdiagram(rs, f).extensive
}

/// Skew matrix of B_f restricted to the roots that meet it, as integers (rational case scaled).
fn bform_rows(rs: &RootSystem, f: &LinearForm) -> (Vec<usize>, Vec<Vec<BigRational>>) {
    let m = rs.len();
    let supp = f.support();
    let active: Vec<usize> =
        (0..m).filter(|&i| (0..m).any(|j| rs.sum_index(i, j).is_some_and(|s| supp.contains(s)))).collect();
    let rows = active
        .iter()
        .map(|&i| {
            active
                .iter()
                .map(|&j| match rs.sum_index(i, j) {
                    Some(s) if supp.contains(s) => f.get(s) * BigRational::from_integer(rs.nab(i, j).into()),
                    _ => BigRational::zero(),
                })
                .collect()
        })
        .collect();
    (active, rows)
}

/// rk B_f over the field of f, where B_f(e_a, e_b) = f([e_a, e_b]).
pub fn bform_rank(rs: &RootSystem, f: &LinearForm) -> usize {
    let (_, rows) = bform_rows(rs, f);
    match f.field {
        Field::Rational => {
            let den = rows.iter().flatten().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            let ints: Vec<Vec<BigInt>> =
                rows.iter().map(|r| r.iter().map(|v| (v * BigRational::from_integer(den.clone())).to_integer()).collect()).collect();
            if ints.iter().flatten().all(|v| v.abs() < BigInt::from(1i64 << 40)) {
                let small: Vec<Vec<i64>> =
                    ints.iter().map(|r| r.iter().map(|v| v.to_i64().expect("fits")).collect()).collect();
                linalg::rank_i64(&small)
            } else {
                linalg::rank_integer(ints)
            }
        }
        Field::Prime(p) => {
            let pb = BigInt::from(p);
            let red: Vec<Vec<u64>> = rows
                .iter()
                .map(|r| {
                    r.iter().map(|v| v.to_integer().mod_floor(&pb).to_u64().expect("reduced")).collect()
                })
                .collect();
            linalg::rank_mod_p(red, p)
        }
    }
}

/// Rank of B_f for integer values on a support, over Q.
pub fn bform_rank_int(rs: &RootSystem, values: &[(usize, i64)]) -> usize {
    let m = rs.len();
    let mut val = vec![0i64; m];
    for &(i, v) in values {
        val[i] = v;
    }
    let active: Vec<usize> =
        (0..m).filter(|&i| (0..m).any(|j| rs.sum_index(i, j).is_some_and(|s| val[s] != 0))).collect();
    let rows: Vec<Vec<i64>> = active
        .iter()
        .map(|&i| {
            active
                .iter()
                .map(|&j| rs.sum_index(i, j).map_or(0, |s| val[s] * rs.nab(i, j) as i64))
                .collect()
        })
        .collect();
    linalg::rank_i64(&rows)
}

/// Rank of B_f over F_p for values in 0..p on the roots.
pub fn bform_rank_mod(rs: &RootSystem, values: &[u64], p: u64) -> usize {
    let m = rs.len();
    let active: Vec<usize> =
        (0..m).filter(|&i| (0..m).any(|j| rs.sum_index(i, j).is_some_and(|s| values[s] != 0))).collect();
    let rows: Vec<Vec<u64>> = active
        .iter()
        .map(|&i| {
            active
                .iter()
                .map(|&j| {
                    rs.sum_index(i, j).map_or(0, |s| {
                        let c = (rs.nab(i, j) as i64).rem_euclid(p as i64) as u64;
                        linalg::mul_mod(c, values[s], p)
                    })
                })
                .collect()
        })
        .collect();
    linalg::rank_mod_p(rows, p)
}

/// Generic rank of B_f over the family V(S): maximum over `trials` random
/// rational points with nonzero integer values on `s`.
pub fn family_rank<R: Rng>(rs: &RootSystem, s: &RootSet, trials: usize, rng: &mut R) -> usize {
    (0..trials)
        .map(|_| {
            let vals: Vec<(usize, i64)> = s
                .iter()
                .map(|i| {
                    let mag = rng.gen_range(1..=97);
                    (i, if rng.gen_bool(0.5) { mag } else { -mag })
                })
                .collect();
            bform_rank_int(rs, &vals)
        })
        .max()
        .unwrap_or(0)
}

/// A component of the canonical decomposition with its restricted form.
#[derive(Clone, Debug)]
pub struct Piece {
    pub component: DynComponent,
    /// Roots of the subsystem spanned by the component.
    pub roots: RootSet,
    pub form: LinearForm,
}

/// Canonical decomposition: extensive pieces plus the character part on isolated simple roots.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub pieces: Vec<Piece>,
    pub character: LinearForm,
}

impl Decomposition {
    /// Sum of all pieces and the character part.
    pub fn reassemble(&self) -> LinearForm {
        let mut f = self.character.clone();
        for p in &self.pieces {
            for (i, v) in p.form.coeffs() {
                f.set(*i, v.clone());
            }
        }
        f
    }
}

/// Roots whose simple-root support lies inside `vertices` (simple-root indices).
pub fn subsystem_roots(rs: &RootSystem, vertices: &[usize]) -> RootSet {
    let bourbaki = rs.bourbaki_simple();
    (0..rs.len())
        .filter(|&i| {
            rs.simple_coords(i).iter().enumerate().all(|(k, &c)| c == 0 || vertices.contains(&bourbaki[k]))
        })
        .collect()
}

/// Split f along the components of Dyn(f).
pub fn decompose(rs: &RootSystem, f: &LinearForm) -> Result<Decomposition> {
    let d = dyn_subdiagram(rs, f);
    let mut covered = RootSet::EMPTY;
    let mut pieces = Vec::new();
    let mut character = LinearForm::zero(f.field());
    for c in d.components {
        if c.vertices.len() == 1 {
            let v = c.vertices[0];
            covered.insert(v);
            character.set(v, f.get(v));
            continue;
        }
        let roots = subsystem_roots(rs, &c.vertices);
        covered = covered.union(&roots);
        pieces.push(Piece { form: f.restrict(&roots), roots, component: c });
    }
    if !f.support().is_subset(&covered) {
        return Err(Error::DecompositionMismatch);
    }
    Ok(Decomposition { pieces, character })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    #[test]
    fn heisenberg_rank() {
        let rs = RootSystem::of(Family::A, 2).unwrap();
        assert_eq!(bform_rank(&rs, &LinearForm::elementary(2)), 2);
        assert_eq!(bform_rank(&rs, &LinearForm::elementary(0)), 0);
        assert_eq!(bform_rank(&rs, &LinearForm::modular(5, [(2, 3)])), 2);
    }

    #[test]
    fn json_round_trip() {
        let f = LinearForm::rational([(0, 3), (4, -2)]);
        let j = FormJson::from(&f);
        assert_eq!(j.coeffs[&1], "3");
        let s = serde_json::to_string(&j).unwrap();
        let back: FormJson = serde_json::from_str(&s).unwrap();
        assert_eq!(LinearForm::try_from(&back).unwrap(), f);
    }

    #[test]
    fn modular_reduction() {
        let f = LinearForm::modular(5, [(0, 10), (1, -1)]);
        assert_eq!(f.support().to_chevie(), vec![2]);
        assert_eq!(f.get(1), BigRational::from_integer(4.into()));
    }
}
