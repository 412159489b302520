use crate::algebra::{LieAlgebra, LinearMap, Vector};
use crate::error::{ensure_dim, Result};

/// `N_A(e_i, e_j)` for `i < j`; bilinearity and antisymmetry give the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NijenhuisTable {
    dim: usize,
    entries: Vec<(usize, usize, Vector)>,
}

impl NijenhuisTable {
    pub fn get(&self, i: usize, j: usize) -> Vector {
        if i == j {
            return Vector::zero(self.dim);
        }
        let (a, b) = (i.min(j), i.max(j));
        let v = &self.entries.iter().find(|(x, y, _)| *x == a && *y == b).expect("index in range").2;
        if i < j {
            v.clone()
        } else {
            -v
        }
    }

    pub fn entries(&self) -> &[(usize, usize, Vector)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|(_, _, v)| v.is_zero())
    }

    pub fn first_nonzero(&self) -> Option<&(usize, usize, Vector)> {
        self.entries.iter().find(|(_, _, v)| !v.is_zero())
    }
}

/// `N_A(x,y) = A²[x,y] + [Ax,Ay] − A[x,Ay] − A[Ax,y]`.
pub fn nijenhuis_pair(g: &LieAlgebra, a: &LinearMap, x: &Vector, y: &Vector) -> Vector {
    let xy = g.bracket(x, y);
    let (ax, ay) = (a.apply(x), a.apply(y));
    let t1 = a.apply(&a.apply(&xy));
    let t2 = g.bracket(&ax, &ay);
    let t3 = a.apply(&g.bracket(x, &ay));
    let t4 = a.apply(&g.bracket(&ax, y));
    &(&(&t1 + &t2) - &t3) - &t4
}

pub fn nijenhuis(g: &LieAlgebra, a: &LinearMap) -> Result<NijenhuisTable> {
    let n = g.dim();
    ensure_dim(n, a.dim())?;
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            entries.push((i, j, nijenhuis_pair(g, a, &g.basis_vector(i), &g.basis_vector(j))));
        }
    }
    Ok(NijenhuisTable { dim: n, entries })
}
