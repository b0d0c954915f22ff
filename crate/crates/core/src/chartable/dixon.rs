//! Dixon-Schneider: common eigenvectors of the class matrices over `F_p`,
//! then lifting of character values to `Z[zeta_e]` through eigenvalue
//! multiplicities.

use super::{row_key, RootChoice};
use crate::classes::ClassData;
use crate::cyclo::lift::IntLift;
use crate::cyclo::Cyclo;
use crate::error::TableError;
use crate::group::PermGroup;
use crate::modp::{prime_one_mod, Fp};

pub(super) struct DixonOutput {
    pub rows: Vec<Vec<Cyclo>>,
    pub lifts: Vec<Vec<IntLift>>,
    pub root: RootChoice,
}

fn inconsistent(msg: impl Into<String>) -> TableError {
    TableError::InternalInconsistency(msg.into())
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

struct ClassMatrices<'a> {
    group: &'a PermGroup,
    members: Vec<Vec<usize>>,
    rep_index: Vec<usize>,
    classes: &'a ClassData,
    f: Fp,
}

impl ClassMatrices<'_> {
    /// `M[l][k] = #{x in C_j : x^-1 z_k in C_l}`, the structure constants
    /// `a_{jlk}` of the class algebra; central characters are the common
    /// right eigenvectors.
    fn matrix(&self, j: usize) -> Vec<Vec<u64>> {
        let k = self.members.len();
        let mut m = vec![vec![0u64; k]; k];
        for &x in &self.members[j] {
            let xi = self.group.inverse_index(x);
            for (col, &z) in self.rep_index.iter().enumerate() {
                let y = self.group.mul_index(xi, z);
                let l = self.classes.class_of_element(y).unwrap();
                m[l][col] += 1;
            }
        }
        let p = self.f.p();
        for row in &mut m {
            for v in row.iter_mut() {
                *v %= p;
            }
        }
        m
    }
}

fn mat_vec(f: &Fp, m: &[Vec<u64>], v: &[u64]) -> Vec<u64> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0u64, |acc, (&a, &b)| if a == 0 || b == 0 { acc } else { f.add(acc, f.mul(a, b)) })
        })
        .collect()
}

/// Splits each pending invariant subspace (RREF basis) into eigenspaces of `m`.
fn split(f: &Fp, m: &[Vec<u64>], basis: Vec<Vec<u64>>) -> Result<Vec<Vec<Vec<u64>>>, TableError> {
    let d = basis.len();
    let pivots: Vec<usize> = basis
        .iter()
        .map(|b| b.iter().position(|&x| x != 0).unwrap())
        .collect();
    let images: Vec<Vec<u64>> = basis.iter().map(|b| mat_vec(f, m, b)).collect();
    let restricted: Vec<Vec<u64>> = (0..d)
        .map(|t| (0..d).map(|s| images[s][pivots[t]]).collect())
        .collect();
    let roots = f.roots(&f.charpoly(&restricted));
    if roots.is_empty() {
        return Err(inconsistent("class matrix has no eigenvalue in F_p"));
    }
    if roots.len() == 1 {
        return Ok(vec![basis]);
    }
    let mut out = Vec::new();
    let mut total = 0;
    for lambda in roots {
        let shifted: Vec<Vec<u64>> = restricted
            .iter()
            .enumerate()
            .map(|(t, row)| {
                row.iter()
                    .enumerate()
                    .map(|(s, &x)| if s == t { f.sub(x, lambda) } else { x })
                    .collect()
            })
            .collect();
        let coords = f.nullspace(&shifted);
        total += coords.len();
        let mut sub: Vec<Vec<u64>> = coords
            .iter()
            .map(|c| {
                let mut v = vec![0u64; basis[0].len()];
                for (s, &cs) in c.iter().enumerate() {
                    if cs != 0 {
                        for (vi, &bi) in v.iter_mut().zip(&basis[s]) {
                            *vi = f.add(*vi, f.mul(cs, bi));
                        }
                    }
                }
                v
            })
            .collect();
        f.rref(&mut sub);
        out.push(sub);
    }
    if total != d {
        return Err(inconsistent("class matrix is not diagonalizable on an invariant subspace"));
    }
    Ok(out)
}

pub(super) fn compute(group: &PermGroup, classes: &ClassData) -> Result<DixonOutput, TableError> {
    let k = classes.len();
    let order = classes.group_order();
    let e = classes.exponent();
    let p = prime_one_mod(e, 2 * isqrt(order) + 1);
    if p >= 1 << 31 {
        return Err(inconsistent(format!("no usable prime for exponent {e}")));
    }
    let f = Fp::new(p);
    let g = f.primitive_root();
    let zeta = f.pow(g, (p - 1) / e);

    let mut members = vec![Vec::new(); k];
    for x in 0..group.order() {
        members[classes.class_of_element(x).unwrap()].push(x);
    }
    let rep_index: Vec<usize> = (0..k)
        .map(|i| group.index_of(classes.representative(i).unwrap()).unwrap())
        .collect();
    let cm = ClassMatrices {
        group,
        members,
        rep_index,
        classes,
        f,
    };

    let mut identity = vec![vec![0u64; k]; k];
    for (i, row) in identity.iter_mut().enumerate() {
        row[i] = 1;
    }
    let mut pending = Vec::new();
    let mut done: Vec<Vec<u64>> = Vec::new();
    if k == 1 {
        done.push(vec![1]);
    } else {
        pending.push(identity);
    }
    let mut j = 1;
    while !pending.is_empty() {
        if j >= k {
            return Err(inconsistent("class matrices do not separate the characters"));
        }
        let m = cm.matrix(j);
        let mut next = Vec::new();
        for basis in pending {
            for sub in split(&f, &m, basis)? {
                if sub.len() == 1 {
                    done.push(sub.into_iter().next().unwrap());
                } else {
                    next.push(sub);
                }
            }
        }
        pending = next;
        j += 1;
    }
    if done.len() != k {
        return Err(inconsistent(format!("found {} central characters for {k} classes", done.len())));
    }

    let size_inv: Vec<u64> = (0..k).map(|i| f.inv(classes.size(i) % p)).collect();
    let dmax = isqrt(order);
    let mut chars: Vec<(u64, Vec<u64>)> = Vec::with_capacity(k);
    for mut w in done {
        if w[0] == 0 {
            return Err(inconsistent("central character vanishes at the identity"));
        }
        let inv0 = f.inv(w[0]);
        for x in w.iter_mut() {
            *x = f.mul(*x, inv0);
        }
        let s = (0..k).fold(0, |acc, i| {
            f.add(acc, f.mul(f.mul(w[i], w[classes.inverse_class(i)]), size_inv[i]))
        });
        if s == 0 {
            return Err(inconsistent("degree norm vanishes mod p"));
        }
        let d2 = f.mul(order % p, f.inv(s));
        let d = (1..=dmax)
            .find(|&d| order % d == 0 && f.mul(d, d) == d2)
            .ok_or_else(|| inconsistent("no degree matches the central character"))?;
        let values: Vec<u64> = (0..k).map(|i| f.mul(f.mul(d, w[i]), size_inv[i])).collect();
        chars.push((d, values));
    }

    let mut rows = Vec::with_capacity(k);
    let mut lifts = Vec::with_capacity(k);
    for (d, values) in &chars {
        let mut row = Vec::with_capacity(k);
        let mut lrow = Vec::with_capacity(k);
        for i in 0..k {
            let m = classes.element_order(i);
            let y = f.pow(zeta, e / m);
            let y_inv = f.inv(y);
            let m_inv = f.inv(m % p);
            let power_vals: Vec<u64> = (0..m).map(|t| values[classes.power_map(i, t as i64)]).collect();
            let mut mult = vec![0i128; m as usize];
            let mut step = 1u64; // y^{-l}
            for (l, c) in mult.iter_mut().enumerate() {
                let mut acc = 0u64;
                let mut w = 1u64; // y^{-jl}
                for &v in &power_vals {
                    acc = f.add(acc, f.mul(v, w));
                    w = f.mul(w, step);
                }
                let c_l = f.mul(acc, m_inv);
                if c_l > *d {
                    return Err(inconsistent(format!(
                        "eigenvalue multiplicity {c_l} exceeds degree {d} at class {i}, exponent {l}"
                    )));
                }
                *c = c_l as i128;
                step = f.mul(step, y_inv);
            }
            if mult.iter().sum::<i128>() != *d as i128 {
                return Err(inconsistent(format!("multiplicities at class {i} do not sum to the degree")));
            }
            let stride = e / m;
            lrow.push(IntLift::from_terms(
                e as u32,
                mult.iter()
                    .enumerate()
                    .map(|(l, &c)| (l as u64 * stride, c as i64)),
            ));
            row.push(Cyclo::from_full_small(m as u32, &mult));
        }
        rows.push(row);
        lifts.push(lrow);
    }

    let mut order_idx: Vec<usize> = (0..k).collect();
    let keys: Vec<(u64, String)> = chars
        .iter()
        .zip(&rows)
        .map(|((d, _), r)| (*d, row_key(r)))
        .collect();
    order_idx.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let rows = order_idx.iter().map(|&a| rows[a].clone()).collect();
    let lifts = order_idx.iter().map(|&a| lifts[a].clone()).collect();
    Ok(DixonOutput {
        rows,
        lifts,
        root: RootChoice {
            prime: p,
            exponent: e,
            root: zeta,
        },
    })
}
