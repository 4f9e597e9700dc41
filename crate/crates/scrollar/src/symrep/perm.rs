use std::collections::{BTreeMap, HashSet};
use std::fmt;

use super::partition::{factorial, Partition};
use super::{CharacterTable, Result, SymError};

/// Permutation of `{0..d-1}` stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(d: usize) -> Self {
        Perm((0..d as u8).collect())
    }

    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &i in &images {
            if i as usize >= d || seen[i as usize] {
                return Err(SymError::InvalidPermutation(format!("{images:?}")));
            }
            seen[i as usize] = true;
        }
        Ok(Perm(images))
    }

    /// Cycles given with 1-based points.
    pub fn from_cycles(d: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut img: Vec<u8> = (0..d as u8).collect();
        let mut used = vec![false; d];
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                if a == 0 || a > d || used[a - 1] {
                    return Err(SymError::InvalidPermutation(format!("{cycles:?}")));
                }
                used[a - 1] = true;
                img[a - 1] = (c[(k + 1) % c.len()] - 1) as u8;
            }
        }
        Ok(Perm(img))
    }

    /// Parses cycle notation such as `(1 2)(3 4)`; `()` is the identity.
    pub fn parse(d: usize, s: &str) -> Result<Self> {
        let bad = || SymError::InvalidPermutation(s.to_string());
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = body.find(')').ok_or_else(bad)?;
            let inner = &body[..close];
            let pts: std::result::Result<Vec<usize>, _> =
                inner.split(|c: char| c == ' ' || c == ',').filter(|x| !x.is_empty()).map(str::parse).collect();
            let pts = pts.map_err(|_| bad())?;
            if !pts.is_empty() {
                cycles.push(pts);
            }
            rest = body[close + 1..].trim_start();
        }
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Perm::from_cycles(d, &refs)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm(inv)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.0.len();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for s in 0..d {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut j = self.apply(s);
            while j != s {
                seen[j] = true;
                c.push(j);
                j = self.apply(j);
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles().iter().map(|c| c.len() as u32).collect())
            .expect("nonempty permutation")
    }

    pub fn sign(&self) -> i32 {
        let odd = self.cycles().iter().filter(|c| c.len() % 2 == 0).count();
        if odd % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j as usize)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles() {
            if c.len() < 2 {
                continue;
            }
            any = true;
            write!(f, "(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

const MAX_ELEMENTS: usize = 40320;

/// Fully enumerated subgroup of S_d, elements sorted by image list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermSubgroup {
    d: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
}

impl PermSubgroup {
    pub fn from_generators(d: usize, generators: Vec<Perm>) -> Result<Self> {
        if d == 0 || d > 8 {
            return Err(SymError::DegreeOutOfRange(d as u32));
        }
        for g in &generators {
            if g.degree() != d {
                return Err(SymError::InvalidPermutation(format!("{g} has degree {}", g.degree())));
            }
        }
        let id = Perm::identity(d);
        let mut seen: HashSet<Perm> = HashSet::new();
        seen.insert(id.clone());
        let mut queue = vec![id];
        while let Some(x) = queue.pop() {
            for g in &generators {
                let y = g.compose(&x);
                if seen.insert(y.clone()) {
                    if seen.len() > MAX_ELEMENTS {
                        return Err(SymError::TooLarge(MAX_ELEMENTS));
                    }
                    queue.push(y);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort();
        Ok(PermSubgroup { d, generators, elements })
    }

    pub fn parse(d: usize, gens: &[&str]) -> Result<Self> {
        let g: Result<Vec<Perm>> = gens.iter().map(|s| Perm::parse(d, s)).collect();
        PermSubgroup::from_generators(d, g?)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> u64 {
        factorial(self.d as u64) / self.order() as u64
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn count_in_class(&self, mu: &Partition) -> usize {
        self.elements.iter().filter(|g| &g.cycle_type() == mu).count()
    }

    pub fn class_counts(&self) -> BTreeMap<Partition, usize> {
        let mut m = BTreeMap::new();
        for g in &self.elements {
            *m.entry(g.cycle_type()).or_insert(0) += 1;
        }
        m
    }

    pub fn is_transitive(&self) -> bool {
        let mut reach = vec![false; self.d];
        for g in &self.elements {
            reach[g.apply(0)] = true;
        }
        reach.iter().all(|&x| x)
    }

    /// σ H σ⁻¹.
    pub fn conjugate(&self, sigma: &Perm) -> PermSubgroup {
        let inv = sigma.inverse();
        let generators: Vec<Perm> = self.generators.iter().map(|g| sigma.compose(g).compose(&inv)).collect();
        let mut elements: Vec<Perm> = self.elements.iter().map(|g| sigma.compose(g).compose(&inv)).collect();
        elements.sort();
        PermSubgroup { d: self.d, generators, elements }
    }

    /// Exhaustive search over S_d for σ with σ H σ⁻¹ = other.
    pub fn is_conjugate_to(&self, other: &PermSubgroup) -> bool {
        if self.d != other.d || self.order() != other.order() || self.class_counts() != other.class_counts() {
            return false;
        }
        let sym = PermSubgroup::symmetric(self.d);
        sym.elements.iter().any(|s| {
            let inv = s.inverse();
            self.generators.iter().all(|g| other.contains(&s.compose(g).compose(&inv)))
        })
    }

    pub fn symmetric(d: usize) -> PermSubgroup {
        let mut gens = Vec::new();
        for i in 1..d {
            gens.push(Perm::from_cycles(d, &[&[i, i + 1]]).expect("adjacent transposition"));
        }
        PermSubgroup::from_generators(d, gens).expect("d <= 8")
    }

    /// p(H) = (d-2)! · #{transpositions outside H} / |H|.
    pub fn p_value(&self) -> Result<u64> {
        let d = self.d as u64;
        if d < 2 {
            return Ok(0);
        }
        let mut t = vec![2];
        t.extend(std::iter::repeat(1).take(self.d - 2));
        let tr = Partition::new(t)?;
        let outside = d * (d - 1) / 2 - self.count_in_class(&tr) as u64;
        let num = factorial(d - 2) * outside;
        if num % self.order() as u64 != 0 {
            return Err(SymError::NonIntegral(format!("p(H) = {num}/{}", self.order())));
        }
        Ok(num / self.order() as u64)
    }

    /// Multiplicities of irreducibles in the permutation character on cosets,
    /// nonzero entries only, in `partitions_of` order.
    pub fn induced_trivial_multiplicities(&self, table: &CharacterTable) -> Result<Vec<(Partition, u64)>> {
        let counts = self.class_counts();
        let mut out = Vec::new();
        for lam in table.partitions() {
            let s: i64 = counts.iter().map(|(mu, &c)| c as i64 * table.value(lam, mu)).sum();
            if s % self.order() as i64 != 0 || s < 0 {
                return Err(SymError::NonIntegral(format!("mult({lam}) = {s}/{}", self.order())));
            }
            if s != 0 {
                out.push((lam.clone(), (s / self.order() as i64) as u64));
            }
        }
        Ok(out)
    }

    /// Resolvent genus p(H)(g+d-1) + 1 - [S_d:H].
    pub fn resolvent_genus(&self, g: i64) -> Result<i64> {
        if self.order() as u64 == factorial(self.d as u64) {
            return Err(SymError::InvalidPermutation("H is the full symmetric group".into()));
        }
        Ok(self.p_value()? as i64 * (g + self.d as i64 - 1) + 1 - self.index() as i64)
    }
}

/// Equal intersection sizes with every conjugacy class.
pub fn gassmann_equivalent(a: &PermSubgroup, b: &PermSubgroup) -> bool {
    a.d() == b.d() && a.class_counts() == b.class_counts()
}
