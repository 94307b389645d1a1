//! Root data of simple Lie algebras, expressed entirely in Dynkin labels.
//!
//! Row `i` of the Cartan matrix holds the Dynkin labels of the simple root `αᵢ`.

use std::collections::{BTreeSet, HashMap};
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::weight::Weight;

const MAX_POSITIVE_ROOTS: usize = 5_000;

/// A positive root together with its expansion in simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub labels: Weight,
    pub coords: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }
}

#[derive(Clone, Debug)]
pub struct AlgebraSpec {
    pub name: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub simple_roots: Vec<Weight>,
    pub positive_roots: Vec<Root>,
    pub weyl_vector: Weight,
    /// Half squared lengths of the simple roots, scaled to coprime integers.
    pub half_norms: Vec<i64>,
}

#[derive(Deserialize)]
struct CartanFile {
    rank: usize,
    cartan: Vec<Vec<i64>>,
    #[serde(default)]
    name: Option<String>,
}

/// Look up a built-in algebra by name, e.g. `"G2"`.
pub fn algebra(name: &str) -> Result<AlgebraSpec> {
    let cartan = builtin_cartan(name).ok_or_else(|| Error::UnsupportedAlgebra(name.to_string()))?;
    AlgebraSpec::from_cartan(&name.to_ascii_uppercase(), cartan)
}

/// Resolve either a built-in name or a path to a JSON Cartan file.
pub fn resolve(name_or_path: &str) -> Result<AlgebraSpec> {
    if builtin_cartan(name_or_path).is_some() {
        return algebra(name_or_path);
    }
    let p = Path::new(name_or_path);
    if p.is_file() {
        return AlgebraSpec::from_json_file(p);
    }
    Err(Error::UnsupportedAlgebra(name_or_path.to_string()))
}

fn builtin_cartan(name: &str) -> Option<Vec<Vec<i64>>> {
    let name = name.to_ascii_uppercase();
    match name.as_str() {
        "B2" => Some(vec![vec![2, -2], vec![-1, 2]]),
        "C2" => Some(vec![vec![2, -1], vec![-2, 2]]),
        "G2" => Some(vec![vec![2, -3], vec![-1, 2]]),
        _ => {
            let r: usize = name.strip_prefix('A')?.parse().ok()?;
            if !(1..=8).contains(&r) {
                return None;
            }
            let mut m = vec![vec![0; r]; r];
            for i in 0..r {
                m[i][i] = 2;
                if i + 1 < r {
                    m[i][i + 1] = -1;
                    m[i + 1][i] = -1;
                }
            }
            Some(m)
        }
    }
}

impl AlgebraSpec {
    pub fn from_json_str(text: &str, default_name: &str) -> Result<AlgebraSpec> {
        let f: CartanFile = serde_json::from_str(text)?;
        if f.cartan.len() != f.rank {
            return Err(Error::InvalidCartan(format!("rank {} but {} rows", f.rank, f.cartan.len())));
        }
        let name = f.name.unwrap_or_else(|| default_name.to_string());
        AlgebraSpec::from_cartan(&name, f.cartan)
    }

    pub fn from_json_file(path: &Path) -> Result<AlgebraSpec> {
        let text = std::fs::read_to_string(path)?;
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("custom");
        AlgebraSpec::from_json_str(&text, stem)
    }

    pub fn from_cartan(name: &str, cartan: Vec<Vec<i64>>) -> Result<AlgebraSpec> {
        let rank = cartan.len();
        validate_cartan(&cartan)?;
        let half_norms = symmetrizer(&cartan)?;
        check_positive_definite(&cartan, &half_norms)?;
        let simple_roots: Vec<Weight> = cartan.iter().map(|row| Weight(row.clone())).collect();
        let positive_roots = positive_root_closure(&simple_roots)?;
        let weyl_vector = Weight(vec![1; rank]);
        let spec = AlgebraSpec { name: name.to_string(), rank, cartan, simple_roots, positive_roots, weyl_vector, half_norms };
        let sum = spec.positive_roots.iter().fold(Weight::zero(rank), |acc, r| &acc + &r.labels);
        if sum != spec.weyl_vector.scale(2) {
            return Err(Error::InvalidCartan(format!("sum of positive roots {sum} is not 2ρ")));
        }
        Ok(spec)
    }

    pub fn simple_root(&self, i: usize) -> &Weight {
        &self.simple_roots[i - 1]
    }

    pub fn rho(&self) -> &Weight {
        &self.weyl_vector
    }

    pub fn fundamental(&self, j: usize) -> Weight {
        Weight::fundamental(self.rank, j)
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if (1..=self.rank).contains(&i) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, rank: self.rank })
        }
    }

    /// `rᵢλ = λ − λᵢαᵢ`, with `i` 1-based.
    pub fn reflect(&self, i: usize, lam: &Weight) -> Weight {
        let k = lam[i - 1];
        let a = &self.simple_roots[i - 1];
        Weight(lam.0.iter().zip(&a.0).map(|(x, y)| x - k * y).collect())
    }

    /// Shifted action `rᵢ.λ = rᵢ(λ + ρ) − ρ`.
    pub fn shifted_reflect(&self, i: usize, lam: &Weight) -> Weight {
        let k = lam[i - 1] + 1;
        let a = &self.simple_roots[i - 1];
        Weight(lam.0.iter().zip(&a.0).map(|(x, y)| x - k * y).collect())
    }

    /// Add `k` copies of `αᵢ` to `lam`.
    pub fn add_root(&self, lam: &Weight, i: usize, k: i64) -> Weight {
        let a = &self.simple_roots[i - 1];
        Weight(lam.0.iter().zip(&a.0).map(|(x, y)| x + k * y).collect())
    }

    /// Labels of `Σ cᵢ αᵢ`.
    pub fn root_combination(&self, coords: &[i64]) -> Weight {
        let mut w = Weight::zero(self.rank);
        for (i, c) in coords.iter().enumerate() {
            for j in 0..self.rank {
                w.0[j] += c * self.simple_roots[i][j];
            }
        }
        w
    }

    /// `(λ, β)` for `β = Σ cᵢαᵢ`, in units where the shortest root has `(α,α) = 2·min(half_norms)`.
    pub fn pair_with_root(&self, lam: &Weight, coords: &[i64]) -> i64 {
        coords.iter().enumerate().map(|(j, c)| c * lam[j] * self.half_norms[j]).sum()
    }

    /// True iff `lam` lies on no shifted reflection wall of the dominant chamber.
    pub fn is_regular_shifted(&self, lam: &Weight) -> bool {
        lam.0.iter().all(|&x| x != -1)
    }

    pub fn positive_root_labels(&self) -> Vec<Weight> {
        self.positive_roots.iter().map(|r| r.labels.clone()).collect()
    }
}

fn validate_cartan(c: &[Vec<i64>]) -> Result<()> {
    let r = c.len();
    if r == 0 {
        return Err(Error::InvalidCartan("rank must be positive".into()));
    }
    for (i, row) in c.iter().enumerate() {
        if row.len() != r {
            return Err(Error::InvalidCartan(format!("row {} has length {}, expected {r}", i + 1, row.len())));
        }
        if row[i] != 2 {
            return Err(Error::InvalidCartan(format!("diagonal entry {} is {}, expected 2", i + 1, row[i])));
        }
        for j in 0..r {
            if i != j {
                if row[j] > 0 {
                    return Err(Error::InvalidCartan(format!("entry ({},{}) is positive", i + 1, j + 1)));
                }
                if (row[j] == 0) != (c[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!("zero pattern not symmetric at ({},{})", i + 1, j + 1)));
                }
            }
        }
    }
    // connectedness: the algebra must be simple
    let mut seen = vec![false; r];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..r {
            if !seen[j] && c[i][j] != 0 {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::InvalidCartan("Dynkin diagram is not connected".into()));
    }
    Ok(())
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Solve `A_ij d_j = A_ji d_i` for positive integers `d`.
fn symmetrizer(c: &[Vec<i64>]) -> Result<Vec<i64>> {
    let r = c.len();
    // rational d_j = num/den
    let mut d: Vec<Option<(i64, i64)>> = vec![None; r];
    d[0] = Some((1, 1));
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        let (ni, di) = d[i].unwrap();
        for j in 0..r {
            if j == i || c[i][j] == 0 {
                continue;
            }
            // d_j = d_i * A_ji / A_ij
            let num = ni * c[j][i];
            let den = di * c[i][j];
            let g = gcd(num, den);
            let (num, den) = if den < 0 { (-num / g, -den / g) } else { (num / g, den / g) };
            match d[j] {
                None => {
                    d[j] = Some((num, den));
                    stack.push(j);
                }
                Some((a, b)) => {
                    if a * den != num * b {
                        return Err(Error::InvalidCartan("matrix is not symmetrizable".into()));
                    }
                }
            }
        }
    }
    let dens: i64 = d.iter().map(|x| x.unwrap().1).fold(1, |acc, b| acc / gcd(acc, b) * b);
    let mut out: Vec<i64> = d.iter().map(|x| x.unwrap().0 * (dens / x.unwrap().1)).collect();
    let g = out.iter().fold(0, |acc, &x| gcd(acc, x));
    for x in &mut out {
        *x /= g;
    }
    Ok(out)
}

/// The symmetrized matrix `A_ij d_j` must be positive definite. Bareiss pivots
/// are the leading principal minors, so all of them must be positive.
fn check_positive_definite(c: &[Vec<i64>], d: &[i64]) -> Result<()> {
    let r = c.len();
    let mut a: Vec<Vec<i128>> = (0..r).map(|i| (0..r).map(|j| (c[i][j] * d[j]) as i128).collect()).collect();
    let mut prev = 1i128;
    for p in 0..r {
        if a[p][p] <= 0 {
            return Err(Error::InvalidCartan("root system is not of finite type".into()));
        }
        for i in p + 1..r {
            for j in p + 1..r {
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
            }
        }
        prev = a[p][p];
    }
    Ok(())
}

/// Positive roots by closure along root strings, processed by height.
fn positive_root_closure(simple: &[Weight]) -> Result<Vec<Root>> {
    let r = simple.len();
    let unit = |i: usize| {
        let mut v = vec![0; r];
        v[i] = 1;
        v
    };
    let mut roots: Vec<Root> = (0..r).map(|i| Root { labels: simple[i].clone(), coords: unit(i) }).collect();
    let mut known: HashMap<Vec<i64>, usize> = roots.iter().enumerate().map(|(k, x)| (x.coords.clone(), k)).collect();
    let mut level: Vec<usize> = (0..r).collect();
    while !level.is_empty() {
        let mut next = BTreeSet::new();
        for &k in &level {
            let beta = roots[k].clone();
            for i in 0..r {
                // p = largest p with beta - p alpha_i a root
                let mut p = 0;
                let mut c = beta.coords.clone();
                loop {
                    c[i] -= 1;
                    if c[i] >= 0 && known.contains_key(&c) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - beta.labels[i];
                if q > 0 {
                    let mut c = beta.coords.clone();
                    c[i] += 1;
                    if !known.contains_key(&c) {
                        next.insert(c);
                    }
                }
            }
        }
        level.clear();
        for c in next {
            let labels = (0..r).fold(Weight::zero(r), |acc, i| {
                let mut w = acc;
                for (x, s) in w.0.iter_mut().zip(&simple[i].0) {
                    *x += c[i] * s;
                }
                w
            });
            known.insert(c.clone(), roots.len());
            level.push(roots.len());
            roots.push(Root { labels, coords: c });
            if roots.len() > MAX_POSITIVE_ROOTS {
                return Err(Error::InvalidCartan("root system is not of finite type".into()));
            }
        }
    }
    Ok(roots)
}
