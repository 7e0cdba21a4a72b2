use super::gl::descriptor_for;
use super::{EvalPoint, GeneratorDescriptor, MinorSpec, Recipe};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational, Scalar};
use crate::sampling::GroupPoint;
use crate::shapes::{index_set, FlagShape, IndexPair};

/// Generators for an orthogonal or symplectic shape: the restricted
/// determinants `J°_ij` over `𝕊°`, the minor `M0`, and the ratios
/// `P_ij = M_ij / M0` over `I0 × I0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OspGeneratorSystem {
    pub shape: FlagShape,
    pub j_circ: Vec<GeneratorDescriptor>,
    /// `None` when the number of blocks is even.
    pub m0: Option<MinorSpec>,
    pub ratios: Vec<GeneratorDescriptor>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OspValues<T> {
    pub j_values: Vec<T>,
    pub m0: Option<T>,
    pub m_values: Vec<T>,
    /// `Err(RatioUndefined)` when `M0` vanishes at the point.
    pub p_values: std::result::Result<Vec<T>, Error>,
}

pub fn build_osp_system(shape: &FlagShape) -> Result<OspGeneratorSystem> {
    if !shape.kind().is_classical_form() {
        return Err(Error::WrongKind {
            expected: "o|sp".into(),
            actual: shape.kind().to_string(),
        });
    }
    let n = shape.n();
    let set = index_set(shape);
    let j_circ = set.pairs().iter().map(|&p| descriptor_for(n, p)).collect();

    let outer = shape.outer_size();
    let (m0, ratios) = match shape.central_segment() {
        None => (None, Vec::new()),
        Some(_) => {
            // rows I_{l0+2} ⊔ ... ⊔ I_l, columns I_1 ⊔ ... ⊔ I_{l0}
            let rows: Vec<usize> = (n - outer + 1..=n).collect();
            let cols: Vec<usize> = (1..=outer).collect();
            let m0 = MinorSpec::new(rows.clone(), cols.clone());
            let ratios = set
                .gamma0()
                .iter()
                .map(|&pair| {
                    // i and j sit before the trailing rows / after the leading columns
                    let mut r = vec![pair.i];
                    r.extend(&rows);
                    let mut c = cols.clone();
                    c.push(pair.j);
                    GeneratorDescriptor {
                        pair,
                        recipe: Recipe::Ratio {
                            numerator: MinorSpec::new(r, c),
                            denominator: m0.clone(),
                        },
                    }
                })
                .collect();
            (Some(m0), ratios)
        }
    };
    Ok(OspGeneratorSystem {
        shape: shape.clone(),
        j_circ,
        m0,
        ratios,
    })
}

impl OspGeneratorSystem {
    /// Minor `M_ij` for a pair of `I0 × I0`.
    pub fn numerator(&self, pair: IndexPair) -> Option<&MinorSpec> {
        self.ratios.iter().find(|d| d.pair == pair).map(|d| match &d.recipe {
            Recipe::Ratio { numerator, .. } => numerator,
            _ => unreachable!("ratio list holds ratio recipes"),
        })
    }

    /// Evaluates every family at a matrix of matching size (no membership check).
    pub fn evaluate<T: Scalar>(&self, point: &Matrix<T>) -> Result<OspValues<T>> {
        let n = self.shape.n();
        if point.rows() != n || point.cols() != n {
            return Err(Error::Dimension(format!("point must be {n}x{n}")));
        }
        let ctx = EvalPoint::new(point)?;
        let j_values = self.j_circ.iter().map(|d| d.eval(&ctx)).collect::<Result<Vec<_>>>()?;
        let m0 = self.m0.as_ref().map(|m| m.eval(&ctx)).transpose()?;
        let m_values = self
            .ratios
            .iter()
            .map(|d| match &d.recipe {
                Recipe::Ratio { numerator, .. } => numerator.eval(&ctx),
                _ => unreachable!("ratio list holds ratio recipes"),
            })
            .collect::<Result<Vec<_>>>()?;
        let p_values = match &m0 {
            None => Ok(Vec::new()),
            Some(den) => m_values
                .iter()
                .map(|m| m.try_div(den).ok_or(Error::RatioUndefined))
                .collect(),
        };
        Ok(OspValues {
            j_values,
            m0,
            m_values,
            p_values,
        })
    }

    /// Every descriptor line emitted by `describe`: `J°`, then `M0`, then ratios.
    pub fn describe(&self) -> Vec<serde_json::Value> {
        let mut out: Vec<serde_json::Value> = self.j_circ.iter().map(GeneratorDescriptor::to_json).collect();
        if let Some(m0) = &self.m0 {
            out.push(serde_json::json!({
                "pair": null, "kind": "minor", "role": "m0",
                "x_rows": m0.rows, "adj_rows": [], "cols": m0.cols,
            }));
        }
        out.extend(self.ratios.iter().map(GeneratorDescriptor::to_json));
        out
    }
}

/// Evaluates the system at a verified group point.
pub fn eval_osp(system: &OspGeneratorSystem, point: &GroupPoint) -> Result<OspValues<Rational>> {
    if point.shape().kind() != system.shape.kind() || point.shape().n() != system.shape.n() {
        return Err(Error::WrongKind {
            expected: system.shape.to_string(),
            actual: point.shape().to_string(),
        });
    }
    system.evaluate(point.matrix())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{inverse, RationalMatrix};
    use crate::oracle::{cofactor_det_oracle, eval_descriptor_oracle};
    use crate::sampling::{Sampler, Seed, ShapeSampler};
    use crate::shapes::{make_shape, GroupKind};

    fn shape(kind: GroupKind, n: usize, parts: &[usize]) -> FlagShape {
        make_shape(kind, n, parts.to_vec()).unwrap()
    }

    #[test]
    fn symplectic_example_system() {
        let s = shape(GroupKind::Sp, 8, &[1, 2, 2, 2, 1]);
        let sys = build_osp_system(&s).unwrap();
        assert_eq!(sys.j_circ.len(), 19);
        assert_eq!(sys.m0, Some(MinorSpec::new(vec![6, 7, 8], vec![1, 2, 3])));
        assert_eq!(sys.ratios.len(), 4);
        assert_eq!(
            sys.numerator(IndexPair::new(5, 4)),
            Some(&MinorSpec::new(vec![5, 6, 7, 8], vec![1, 2, 3, 4]))
        );
        assert_eq!(sys.describe().len(), 24);
        // J° uses exactly the GL recipes
        let gl = crate::generators::build_generators(&s.as_gl()).unwrap();
        for d in &sys.j_circ {
            assert!(gl.contains(d));
        }
    }

    #[test]
    fn even_block_count() {
        let s = shape(GroupKind::O, 4, &[2, 2]);
        let sys = build_osp_system(&s).unwrap();
        assert!(sys.ratios.is_empty());
        assert!(sys.m0.is_none());
        assert_eq!(sys.describe().len(), sys.j_circ.len());
    }

    #[test]
    fn orthogonal_five() {
        let s = shape(GroupKind::O, 5, &[1, 3, 1]);
        let sys = build_osp_system(&s).unwrap();
        assert_eq!(sys.m0, Some(MinorSpec::new(vec![5], vec![1])));
        assert_eq!(sys.ratios.len(), 9);
        assert!(sys.ratios.iter().all(|d| (2..=4).contains(&d.pair.i) && (2..=4).contains(&d.pair.j)));
    }

    #[test]
    fn wrong_kind() {
        assert!(build_osp_system(&shape(GroupKind::Gl, 3, &[1, 2])).is_err());
    }

    #[test]
    fn identity_has_undefined_ratios() {
        let s = shape(GroupKind::O, 5, &[1, 3, 1]);
        let sys = build_osp_system(&s).unwrap();
        let e = GroupPoint::new(&s, RationalMatrix::identity(5)).unwrap();
        let v = eval_osp(&sys, &e).unwrap();
        assert_eq!(v.j_values.len(), sys.j_circ.len());
        assert_eq!(v.p_values, Err(Error::RatioUndefined));
    }

    #[test]
    fn ratios_match_two_minor_oracle() {
        let s = shape(GroupKind::Sp, 8, &[1, 2, 2, 2, 1]);
        let sys = build_osp_system(&s).unwrap();
        let ctx = ShapeSampler::new(&s);
        let mut checked = 0;
        for t in 0..5 {
            let x = ctx.sample_group_point(&mut Sampler::new(Seed::new(21, t)), 10, false).unwrap();
            let v = eval_osp(&sys, &x).unwrap();
            let m = x.matrix();
            assert_eq!(v.j_values[0], m.get(7, 0).clone());
            let Ok(p) = v.p_values else { continue };
            let den = cofactor_det_oracle(&m.select(&[5, 6, 7], &[0, 1, 2]));
            for (d, pv) in sys.ratios.iter().zip(&p) {
                let num = cofactor_det_oracle(&m.select(
                    &[d.pair.i - 1, 5, 6, 7],
                    &[0, 1, 2, d.pair.j - 1],
                ));
                assert_eq!(pv, &(num / &den));
                assert_eq!(pv, &eval_descriptor_oracle(d, m));
            }
            checked += 1;
        }
        assert!(checked > 0);
    }

    #[test]
    fn invariance_under_radical() {
        let s = shape(GroupKind::O, 6, &[2, 2, 2]);
        let sys = build_osp_system(&s).unwrap();
        let ctx = ShapeSampler::new(&s);
        for t in 0..5 {
            let mut rng = Sampler::new(Seed::new(31, t));
            let x = ctx.sample_group_point(&mut rng, 10, false).unwrap();
            let g = ctx.sample_unipotent_radical(&mut rng, 10).unwrap();
            let gi = inverse(g.matrix()).unwrap().unwrap();
            let y = gi.mul(x.matrix()).unwrap().mul(g.matrix()).unwrap();
            let y = GroupPoint::new(&s, y).unwrap();
            assert_eq!(eval_osp(&sys, &x).unwrap(), eval_osp(&sys, &y).unwrap());
        }
    }
}
