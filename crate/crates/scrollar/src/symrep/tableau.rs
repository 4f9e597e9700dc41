use super::partition::Partition;

/// A standard Young tableau, rows listed top to bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Option<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect()).ok()?;
        let d = shape.d();
        let mut seen = vec![false; d as usize + 1];
        for r in &rows {
            for &x in r {
                if x == 0 || x > d || seen[x as usize] {
                    return None;
                }
                seen[x as usize] = true;
            }
            if r.windows(2).any(|w| w[0] >= w[1]) {
                return None;
            }
        }
        for i in 1..rows.len() {
            if rows[i].iter().zip(&rows[i - 1]).any(|(b, a)| b <= a) {
                return None;
            }
        }
        Some(StandardTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Rows concatenated from the bottom row up.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// `i` such that `i+1` precedes `i` in the reading word.
    pub fn descents(&self) -> Vec<u32> {
        let word = self.reading_word();
        let mut pos = vec![0usize; word.len() + 2];
        for (k, &x) in word.iter().enumerate() {
            pos[x as usize] = k;
        }
        (1..word.len() as u32).filter(|&i| pos[i as usize + 1] < pos[i as usize]).collect()
    }
}

/// All standard tableaux of shape λ, filled by placing 1, 2, … in the
/// topmost admissible row first.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    let parts = shape.parts();
    let d = shape.d();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); parts.len()];
    let mut out = Vec::new();
    fn rec(n: u32, d: u32, parts: &[u32], rows: &mut Vec<Vec<u32>>, shape: &Partition, out: &mut Vec<StandardTableau>) {
        if n > d {
            out.push(StandardTableau { shape: shape.clone(), rows: rows.clone() });
            return;
        }
        for i in 0..parts.len() {
            let len = rows[i].len();
            if len < parts[i] as usize && (i == 0 || rows[i - 1].len() > len) {
                rows[i].push(n);
                rec(n + 1, d, parts, rows, shape, out);
                rows[i].pop();
            }
        }
    }
    rec(1, d, parts, &mut rows, shape, &mut out);
    out
}
