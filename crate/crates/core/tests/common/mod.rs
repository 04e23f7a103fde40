//! Reference implementations used only by the integration tests. They are
//! deliberately naive and share no code with the library.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

pub type Poly = HashMap<Vec<u8>, i64>;

/// Partitions of `n` as plain vectors, largest first.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn conjugate(p: &[usize]) -> Vec<usize> {
    let w = p.first().copied().unwrap_or(0);
    (1..=w).map(|c| p.iter().filter(|&&x| x >= c).count()).collect()
}

pub fn fits(p: &[usize], rows: usize, cols: usize) -> bool {
    p.len() <= rows && p.iter().all(|&x| x <= cols)
}

pub fn contains(outer: &[usize], inner: &[usize]) -> bool {
    inner.len() <= outer.len() && inner.iter().zip(outer).all(|(a, b)| a <= b)
}

/// Schur polynomial in `k` variables by listing semistandard tableaux.
pub fn schur_poly(shape: &[usize], k: usize) -> Poly {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut filling: HashMap<(usize, usize), u8> = HashMap::new();
    let mut out = Poly::new();
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        k: usize,
        filling: &mut HashMap<(usize, usize), u8>,
        out: &mut Poly,
    ) {
        if idx == cells.len() {
            let mut exp = vec![0u8; k];
            for v in filling.values() {
                exp[*v as usize] += 1;
            }
            *out.entry(exp).or_insert(0) += 1;
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { filling[&(r, c - 1)] } else { 0 };
        let lo_col = if r > 0 { filling[&(r - 1, c)] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..k as u8 {
            filling.insert((r, c), v);
            rec(idx + 1, cells, k, filling, out);
        }
        filling.remove(&(r, c));
    }
    rec(0, &cells, k, &mut filling, &mut out);
    out
}

pub fn poly_mul(f: &Poly, g: &Poly) -> Poly {
    let mut out = Poly::new();
    for (a, x) in f {
        for (b, y) in g {
            let e: Vec<u8> = a.iter().zip(b).map(|(p, q)| p + q).collect();
            *out.entry(e).or_insert(0) += x * y;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Writes a symmetric polynomial in the Schur basis by peeling off the
/// lexicographically largest monomial.
pub fn schur_expand(f: &Poly, k: usize) -> BTreeMap<Vec<usize>, i64> {
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while let Some((lead, c)) = rest
        .iter()
        .filter(|(_, c)| **c != 0)
        .max_by(|a, b| a.0.cmp(b.0))
        .map(|(e, c)| (e.clone(), *c))
    {
        let shape: Vec<usize> = lead.iter().map(|&x| x as usize).filter(|&x| x > 0).collect();
        for (e, d) in schur_poly(&shape, k) {
            *rest.entry(e).or_insert(0) -= c * d;
        }
        rest.retain(|_, c| *c != 0);
        out.insert(shape, c);
    }
    out
}

/// `s_lambda s_mu` in the Schur basis, using enough variables to be exact.
pub fn lr_products(lambda: &[usize], mu: &[usize]) -> BTreeMap<Vec<usize>, i64> {
    let k = (lambda.len() + mu.len()).max(1);
    schur_expand(&poly_mul(&schur_poly(lambda, k), &schur_poly(mu, k)), k)
}

pub fn lr_oracle(lambda: &[usize], mu: &[usize], nu: &[usize]) -> i64 {
    lr_products(lambda, mu).get(nu).copied().unwrap_or(0)
}

/// Bruhat order as the transitive closure of `w < w t` whenever the
/// transposition raises the inversion count.
pub fn bruhat_closure(n: usize) -> (Vec<Vec<usize>>, Vec<Vec<bool>>) {
    let mut perms: Vec<Vec<usize>> = Vec::new();
    fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in 1..=n {
            if !cur.contains(&x) {
                cur.push(x);
                rec(n, cur, out);
                cur.pop();
            }
        }
    }
    rec(n, &mut Vec::new(), &mut perms);
    let inv = |w: &[usize]| {
        (0..w.len())
            .flat_map(|p| (p + 1..w.len()).map(move |q| (p, q)))
            .filter(|&(p, q)| w[p] > w[q])
            .count()
    };
    let m = perms.len();
    let mut leq = vec![vec![false; m]; m];
    for (a, u) in perms.iter().enumerate() {
        let mut stack = vec![a];
        leq[a][a] = true;
        while let Some(x) = stack.pop() {
            let w = perms[x].clone();
            for p in 0..n {
                for q in p + 1..n {
                    let mut t = w.clone();
                    t.swap(p, q);
                    if inv(&t) > inv(&w) {
                        let y = perms.iter().position(|z| *z == t).unwrap();
                        if !leq[a][y] {
                            leq[a][y] = true;
                            stack.push(y);
                        }
                    }
                }
            }
        }
        let _ = u;
    }
    (perms, leq)
}
