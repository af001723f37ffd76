//! Standard tableaux and irreducible representation matrices R_λ(p)
//! via Clifton's algorithm: R_λ(p) = A_λ(id)⁻¹ A_λ(p).

use num_rational::BigRational;

use super::{GroupAlgebraElement, Partition, Permutation};
use crate::linalg::{rcf, ExactMatrix};

/// A standard Young tableau with 0-based entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<u8>>,
    row_of: Vec<u8>,
}

impl StandardTableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Rows of 1-based entries.
    pub fn filling(&self) -> Vec<Vec<usize>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&x| x as usize + 1).collect())
            .collect()
    }

    /// Columns of 0-based entries, each listed top to bottom.
    fn columns(&self) -> Vec<Vec<u8>> {
        (0..self.rows[0].len())
            .map(|c| self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect())
            .collect()
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self
            .columns()
            .iter()
            .all(|c| c.windows(2).all(|w| w[0] < w[1]));
        rows_ok && cols_ok
    }
}

/// Standard tableaux of shape λ, ordered lexicographically by the sequence
/// (row of 1, row of 2, ..., row of n).
pub fn standard_tableaux(lambda: &Partition) -> Vec<StandardTableau> {
    fn rec(
        k: usize,
        n: usize,
        shape: &[usize],
        rows: &mut Vec<Vec<u8>>,
        row_of: &mut Vec<u8>,
        out: &mut Vec<StandardTableau>,
        lambda: &Partition,
    ) {
        if k == n {
            out.push(StandardTableau {
                shape: lambda.clone(),
                rows: rows.clone(),
                row_of: row_of.clone(),
            });
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(k as u8);
                row_of.push(r as u8);
                rec(k + 1, n, shape, rows, row_of, out, lambda);
                row_of.pop();
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); lambda.len()];
    rec(
        0,
        lambda.weight(),
        lambda.parts(),
        &mut rows,
        &mut Vec::new(),
        &mut out,
        lambda,
    );
    out
}

fn sequence_sign(seq: &[u8]) -> i64 {
    let mut inv = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Precomputed data for one irreducible representation.
#[derive(Clone, Debug)]
pub struct Irrep {
    lambda: Partition,
    tableaux: Vec<StandardTableau>,
    columns: Vec<Vec<Vec<u8>>>,
    a_id_inv: Vec<i64>,
}

impl Irrep {
    pub fn new(lambda: &Partition) -> Self {
        let tableaux = standard_tableaux(lambda);
        let columns = tableaux.iter().map(|t| t.columns()).collect();
        let mut irrep = Irrep {
            lambda: lambda.clone(),
            tableaux,
            columns,
            a_id_inv: Vec::new(),
        };
        let d = irrep.dim();
        let a = irrep.clifton(&Permutation::identity(lambda.weight()));
        // Invert [A | I] by row reduction; det A = ±1 so the inverse is integral.
        let mut aug = ExactMatrix::zeros(d, 2 * d);
        for i in 0..d {
            for j in 0..d {
                aug.set(i, j, BigRational::from_integer(a[i * d + j].into()));
            }
            aug.set(i, d + i, BigRational::from_integer(1.into()));
        }
        let (r, rank) = rcf(&aug);
        assert_eq!(rank, d, "Clifton matrix of the identity is singular");
        irrep.a_id_inv = (0..d)
            .flat_map(|i| (0..d).map(move |j| (i, j)))
            .map(|(i, j)| {
                let x = r.get(i, d + j);
                assert!(x.is_integer(), "non-integral inverse");
                i64::try_from(x.to_integer()).expect("small entry")
            })
            .collect();
        irrep
    }

    pub fn partition(&self) -> &Partition {
        &self.lambda
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    /// A_λ(p), row-major. Entry (i, j) is the coefficient of the tabloid
    /// {T_i} in the polytabloid e_{pT_j}.
    pub fn clifton(&self, p: &Permutation) -> Vec<i64> {
        assert_eq!(p.degree(), self.lambda.weight(), "degree mismatch");
        let d = self.dim();
        let mut a = vec![0i64; d * d];
        let mut seq = Vec::new();
        for (i, ti) in self.tableaux.iter().enumerate() {
            'cols: for (j, cols) in self.columns.iter().enumerate() {
                let mut sign = 1;
                for col in cols {
                    seq.clear();
                    for &y in col {
                        let r = ti.row_of[p.apply(y as usize)];
                        if seq.contains(&r) {
                            continue 'cols;
                        }
                        seq.push(r);
                    }
                    sign *= sequence_sign(&seq);
                }
                a[i * d + j] = sign;
            }
        }
        a
    }

    /// R_λ(p), row-major.
    pub fn matrix(&self, p: &Permutation) -> Vec<i64> {
        let d = self.dim();
        let a = self.clifton(p);
        let mut r = vec![0i64; d * d];
        for i in 0..d {
            for k in 0..d {
                let x = self.a_id_inv[i * d + k];
                if x == 0 {
                    continue;
                }
                for j in 0..d {
                    r[i * d + j] += x * a[k * d + j];
                }
            }
        }
        r
    }

    pub fn exact_matrix(&self, p: &Permutation) -> ExactMatrix {
        to_exact(self.dim(), &self.matrix(p))
    }

    /// Σ c_p R_λ(p).
    pub fn image(&self, x: &GroupAlgebraElement) -> ExactMatrix {
        let d = self.dim();
        let mut out = ExactMatrix::zeros(d, d);
        for (p, c) in x.terms() {
            let m = self.matrix(p);
            for i in 0..d {
                for j in 0..d {
                    let v = m[i * d + j];
                    if v != 0 {
                        let cur = out.get(i, j) + c * BigRational::from_integer(v.into());
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }
}

fn to_exact(d: usize, m: &[i64]) -> ExactMatrix {
    let rows: Vec<Vec<i64>> = m.chunks(d).map(|r| r.to_vec()).collect();
    ExactMatrix::from_i64_rows(d, &rows).expect("square")
}

/// R_λ(p) for every p in S_n, indexed by lexicographic rank of p.
#[derive(Clone, Debug)]
pub struct IrrepTable {
    dim: usize,
    mats: Vec<Vec<i64>>,
}

impl IrrepTable {
    pub fn new(irrep: &Irrep) -> Self {
        let n = irrep.partition().weight();
        let mats = Permutation::all(n).iter().map(|p| irrep.matrix(p)).collect();
        IrrepTable {
            dim: irrep.dim(),
            mats,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, p: &Permutation) -> &[i64] {
        &self.mats[p.lex_rank()]
    }

    pub fn by_rank(&self, rank: usize) -> &[i64] {
        &self.mats[rank]
    }
}

/// The image of a permutation under the irreducible representation λ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrepMatrix {
    pub partition: Partition,
    pub matrix: ExactMatrix,
}

pub fn clifton_matrix(lambda: &Partition, p: &Permutation) -> ExactMatrix {
    let irrep = Irrep::new(lambda);
    to_exact(irrep.dim(), &irrep.clifton(p))
}

pub fn irrep(lambda: &Partition, p: &Permutation) -> IrrepMatrix {
    IrrepMatrix {
        partition: lambda.clone(),
        matrix: Irrep::new(lambda).exact_matrix(p),
    }
}

pub fn algebra_image(lambda: &Partition, x: &GroupAlgebraElement) -> ExactMatrix {
    Irrep::new(lambda).image(x)
}

/// RCFs of the images of a degree-3 group algebra element under the three
/// irreducible representations (3), (2,1), (1,1,1). Two trilinear operations
/// are equivalent exactly when their signatures agree.
pub fn operation_signature(x: &GroupAlgebraElement) -> Vec<ExactMatrix> {
    assert_eq!(x.degree(), 3, "operation signature needs degree 3");
    super::partitions(3)
        .iter()
        .map(|l| rcf(&algebra_image(l, x)).0)
        .collect()
}

/// Trace of R_λ(p); used as a character value.
pub fn character(irrep: &Irrep, p: &Permutation) -> i64 {
    let d = irrep.dim();
    let m = irrep.matrix(p);
    (0..d).map(|i| m[i * d + i]).sum()
}
