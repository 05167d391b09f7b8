//! The Müger centralizer computed three ways.

use std::fmt;
use std::str::FromStr;

use crate::coideal::{drinfeld_partner, CoidealSubalgebra};
use crate::cyclotomic::Cyclo;
use crate::error::{Error, Result};

use super::{Category, FusionSubcategory};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    /// `{i : s_ij = d_i d_j for all j in D}`.
    SMatrix,
    /// `Rep(A//M)` with `M = phi_R((A//L)*)`.
    Phi,
    /// `{m : C^(j_m) in L}`, with `j_m` the block of the class partition
    /// holding `m`; the classes inside `L` must be the support of `Lambda_L`.
    Classes,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::SMatrix, Method::Phi, Method::Classes];

    pub fn name(self) -> &'static str {
        match self {
            Method::SMatrix => "smatrix",
            Method::Phi => "phi",
            Method::Classes => "classes",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// `D'`. Methods `phi` and `classes` need the coideal `L` with `D = Rep(A//L)`.
pub fn centralizer(
    cat: &Category,
    d: &FusionSubcategory,
    method: Method,
    l: Option<&CoidealSubalgebra>,
) -> Result<FusionSubcategory> {
    let a = &cat.algebra;
    let needs_coideal = || -> Result<&CoidealSubalgebra> {
        let l = l.ok_or_else(|| Error::MethodPreconditionViolated(format!("method {method} needs a coideal")))?;
        if cat.quotient_irreps(l)?.simples != d.simples {
            return Err(Error::MethodPreconditionViolated(format!(
                "{} does not realize the subcategory",
                l.label()
            )));
        }
        Ok(l)
    };
    let simples = match method {
        Method::SMatrix => (0..cat.len())
            .filter(|&i| {
                d.simples.iter().all(|&j| {
                    *cat.smatrix.get(i, j) == Cyclo::from_int((cat.dims[i] * cat.dims[j]) as i64)
                })
            })
            .collect(),
        Method::Phi => {
            let l = needs_coideal()?;
            let m = drinfeld_partner(a, l)?;
            cat.quotient_irreps(&m)?.simples
        }
        Method::Classes => {
            let l = needs_coideal()?;
            let inside = cat.classes.classes_inside(l.space());
            let support = cat.classes.idempotent_support(l.integral(a)?);
            if inside != support {
                return Err(Error::InternalMismatch(format!(
                    "classes inside L {inside:?} differ from the support of Lambda_L {support:?}"
                )));
            }
            let mut out: Vec<usize> = inside
                .iter()
                .flat_map(|&j| cat.classes.partition[j].iter().copied())
                .collect();
            out.sort();
            out.dedup();
            out
        }
    };
    Ok(cat.subcategory(simples, None))
}
