//! Arithmetic and dense linear algebra over a prime field `F_p`, `p < 2^31`.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2 && p < (1 << 31) && is_prime(p), "{p} is not a usable prime");
        Fp { p }
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn from_i64(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "zero has no inverse");
        self.pow(a, self.p - 2)
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: u64) -> u64 {
        let n = self.p - 1;
        let mut ord = n;
        for q in crate::cyclo::prime_factors(n) {
            while ord % q == 0 && self.pow(a, ord / q) == 1 {
                ord /= q;
            }
        }
        ord
    }

    /// Least generator of `F_p^*`.
    pub fn primitive_root(&self) -> u64 {
        (1..self.p)
            .find(|&g| self.order(g) == self.p - 1)
            .expect("F_p^* is cyclic")
    }

    /// All roots in `F_p` of `poly` (low degree first), in increasing order.
    pub fn roots(&self, poly: &[u64]) -> Vec<u64> {
        let degree = poly.iter().rposition(|&c| c != 0).unwrap_or(0);
        let mut out = Vec::new();
        for x in 0..self.p {
            if out.len() == degree {
                break;
            }
            let v = poly
                .iter()
                .rev()
                .fold(0, |acc, &c| self.add(self.mul(acc, x), c));
            if v == 0 {
                out.push(x);
            }
        }
        out
    }

    /// Characteristic polynomial `det(xI - A)`, low degree first, via
    /// reduction to upper Hessenberg form.
    pub fn charpoly(&self, a: &[Vec<u64>]) -> Vec<u64> {
        let n = a.len();
        let mut h: Vec<Vec<u64>> = a.to_vec();
        for j in 0..n.saturating_sub(2) {
            let Some(piv) = (j + 1..n).find(|&i| h[i][j] != 0) else {
                continue;
            };
            if piv != j + 1 {
                h.swap(piv, j + 1);
                for row in h.iter_mut() {
                    row.swap(piv, j + 1);
                }
            }
            let inv = self.inv(h[j + 1][j]);
            for r in j + 2..n {
                let u = self.mul(h[r][j], inv);
                if u == 0 {
                    continue;
                }
                for c in 0..n {
                    let t = self.mul(u, h[j + 1][c]);
                    h[r][c] = self.sub(h[r][c], t);
                }
                for row in h.iter_mut() {
                    let t = self.mul(u, row[r]);
                    row[j + 1] = self.add(row[j + 1], t);
                }
            }
        }
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for m in 1..=n {
            let prev = &polys[m - 1];
            let mut next = vec![0u64; m + 1];
            for (i, &c) in prev.iter().enumerate() {
                next[i + 1] = self.add(next[i + 1], c);
                next[i] = self.sub(next[i], self.mul(h[m - 1][m - 1], c));
            }
            let mut sub = 1u64;
            for i in 1..m {
                sub = self.mul(sub, h[m - i][m - i - 1]);
                let coef = self.mul(h[m - i - 1][m - 1], sub);
                if coef == 0 {
                    continue;
                }
                for (t, &c) in polys[m - i - 1].iter().enumerate() {
                    next[t] = self.sub(next[t], self.mul(coef, c));
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&self, m: &mut Vec<Vec<u64>>) -> Vec<usize> {
        let rows = m.len();
        let cols = m.first().map_or(0, |r| r.len());
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(r, piv);
            let inv = self.inv(m[r][c]);
            for x in m[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..rows {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c];
                    for k in 0..cols {
                        let t = self.mul(f, m[r][k]);
                        m[i][k] = self.sub(m[i][k], t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        pivots
    }

    /// Basis of `{v : A v = 0}` for a square or rectangular `A`.
    pub fn nullspace(&self, a: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let cols = a.first().map_or(0, |r| r.len());
        let mut m = a.to_vec();
        let pivots = self.rref(&mut m);
        let mut basis = Vec::new();
        for free in (0..cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0u64; cols];
            v[free] = 1;
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = self.neg(row[free]);
            }
            basis.push(v);
        }
        basis
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime `p = 1 (mod e)` with `p > bound`.
pub fn prime_one_mod(e: u64, bound: u64) -> u64 {
    let mut p = bound / e * e + 1;
    while p <= bound || !is_prime(p) {
        p += e;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn det(f: &Fp, a: &[Vec<u64>]) -> u64 {
        // Laplace expansion; fine for the tiny matrices used here.
        let n = a.len();
        if n == 0 {
            return 1;
        }
        let mut total = 0;
        for c in 0..n {
            let minor: Vec<Vec<u64>> = a[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, &x)| x).collect())
                .collect();
            let term = f.mul(a[0][c], det(f, &minor));
            total = if c % 2 == 0 { f.add(total, term) } else { f.sub(total, term) };
        }
        total
    }

    #[test]
    fn charpoly_matches_determinant() {
        let f = Fp::new(101);
        let a = vec![
            vec![3, 0, 7, 1],
            vec![0, 0, 5, 2],
            vec![9, 4, 0, 0],
            vec![1, 1, 1, 100],
        ];
        let cp = f.charpoly(&a);
        assert_eq!(cp.len(), 5);
        assert_eq!(cp[4], 1);
        for x in 0..101 {
            let xa: Vec<Vec<u64>> = (0..4)
                .map(|i| (0..4).map(|j| f.sub(if i == j { x } else { 0 }, a[i][j])).collect())
                .collect();
            let v = cp.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c));
            assert_eq!(v, det(&f, &xa), "x = {x}");
        }
    }

    #[test]
    fn nullspace_and_rref() {
        let f = Fp::new(7);
        let a = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = f.nullspace(&a);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let s = (0..3).fold(0, |acc, k| f.add(acc, f.mul(a[0][k], v[k])));
            assert_eq!(s, 0);
        }
    }

    #[test]
    fn primes_and_roots() {
        assert_eq!(prime_one_mod(168, 52), 337);
        assert_eq!(prime_one_mod(2, 4), 5);
        let f = Fp::new(13);
        assert_eq!(f.primitive_root(), 2);
        assert_eq!(f.order(3), 3);
        // (x - 2)(x - 5) = x^2 - 7x + 10
        assert_eq!(f.roots(&[10, 13 - 7, 1]), vec![2, 5]);
    }
}
