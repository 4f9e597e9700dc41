use std::collections::HashMap;

/// Monomials of a fixed degree in n variables, in graded-lex order.
#[derive(Clone, Debug)]
pub struct Monomials {
    nvars: usize,
    degree: usize,
    list: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
}

impl Monomials {
    pub fn new(nvars: usize, degree: usize) -> Self {
        let mut list = Vec::new();
        let mut cur = vec![0u8; nvars];
        fill(nvars, 0, degree, &mut cur, &mut list);
        list.reverse();
        let index = list.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Monomials { nvars, degree, list, index }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn get(&self, i: usize) -> &[u8] {
        &self.list[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<u8>> {
        self.list.iter()
    }

    pub fn index_of(&self, m: &[u8]) -> usize {
        self.index[m]
    }

    /// Σ a_j w_j.
    pub fn weight(&self, i: usize, w: &[i64]) -> i64 {
        self.list[i].iter().zip(w).map(|(&a, &x)| a as i64 * x).sum()
    }

    /// Index of x_j x_k (j ≤ k) among quadratic monomials.
    pub fn pair(&self, j: usize, k: usize) -> usize {
        let mut m = vec![0u8; self.nvars];
        m[j] += 1;
        m[k] += 1;
        self.index_of(&m)
    }
}

fn fill(n: usize, pos: usize, left: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
    if pos + 1 == n {
        cur[pos] = left as u8;
        out.push(cur.clone());
        return;
    }
    for a in 0..=left {
        cur[pos] = a as u8;
        fill(n, pos + 1, left - a, cur, out);
    }
    cur[pos] = 0;
}

pub(crate) fn add_exps(a: &[u8], b: &[u8]) -> Vec<u8> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}
