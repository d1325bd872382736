use serde::Serialize;

use super::IndecUniverse;
use crate::approx::AddSubcategory;
use crate::error::Result;
use crate::module::ext;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    /// `Ext^i(x, B) = 0` for all `1 <= i <= n-1`.
    LeftPerp,
    /// `Ext^i(B, x) = 0` for all `1 <= i <= n-1`.
    RightPerp,
}

/// One way in which `B = ⊥B = B⊥` fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// `x` is perpendicular to `B` but not in `B`.
    Outside { module: String, side: Side },
    /// `x` is in `B` with a nonzero `Ext^degree` against the generator.
    Inside { module: String, side: Side, degree: usize, generator: String, dim: usize },
}

impl Violation {
    pub fn module(&self) -> &str {
        match self {
            Violation::Outside { module, .. } | Violation::Inside { module, .. } => module,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClusterReport {
    pub n: usize,
    pub members: Vec<String>,
    pub left_perp: Vec<String>,
    pub right_perp: Vec<String>,
    pub violations: Vec<Violation>,
    pub pass: bool,
}

/// Checks `B = ⊥_{n-1} B = B^⊥_{n-1}` over every indecomposable of `u`.
pub fn is_n_cluster_tilting(u: &IndecUniverse, b: &AddSubcategory, n: usize) -> Result<ClusterReport> {
    let mut report =
        ClusterReport { n, members: Vec::new(), left_perp: Vec::new(), right_perp: Vec::new(), violations: Vec::new(), pass: false };
    for (x, name) in u.indecs.iter().zip(&u.names) {
        let member = b.find_generator(x)?.is_some();
        if member {
            report.members.push(name.clone());
        }
        let mut left = true;
        let mut right = true;
        for (s, g) in b.generators().iter().enumerate() {
            for i in 1..n {
                let l = ext(x, g, i)?.dim;
                let r = ext(g, x, i)?.dim;
                if l > 0 {
                    left = false;
                    if member {
                        report.violations.push(Violation::Inside {
                            module: name.clone(),
                            side: Side::LeftPerp,
                            degree: i,
                            generator: b.name(s).to_string(),
                            dim: l,
                        });
                    }
                }
                if r > 0 {
                    right = false;
                    if member {
                        report.violations.push(Violation::Inside {
                            module: name.clone(),
                            side: Side::RightPerp,
                            degree: i,
                            generator: b.name(s).to_string(),
                            dim: r,
                        });
                    }
                }
            }
        }
        if left {
            report.left_perp.push(name.clone());
            if !member {
                report.violations.push(Violation::Outside { module: name.clone(), side: Side::LeftPerp });
            }
        }
        if right {
            report.right_perp.push(name.clone());
            if !member {
                report.violations.push(Violation::Outside { module: name.clone(), side: Side::RightPerp });
            }
        }
    }
    report.pass = report.violations.is_empty();
    Ok(report)
}
