//! Exact character generators of simple Lie algebras.
//!
//! The generating function `X(L, a) = Σ_λ L^λ ch_λ(a)` is computed by several independent
//! routes (defining sum, `Y/Z` factorization, Demazure sweep, poset/graph formula) that
//! agree coefficient by coefficient up to a chosen truncation in `L`.

pub mod characters;
pub mod demazure;
pub mod error;
pub mod genfun;
pub mod poly;
pub mod posetgraph;
pub mod rootsys;
pub mod verify;
pub mod weight;
pub mod weyl;

pub use error::{Error, Result};
pub use poly::{CharPoly, GenSeries};
pub use rootsys::AlgebraSpec;
pub use weight::Weight;
pub use weyl::{LongestElement, WeylElement, WeylGroup};

use characters::CharacterCache;

/// Root data, Weyl group and character cache for one algebra.
#[derive(Debug)]
pub struct Algebra {
    pub spec: AlgebraSpec,
    pub group: WeylGroup,
    pub longest: LongestElement,
    characters: CharacterCache,
}

impl Algebra {
    pub fn new(spec: AlgebraSpec) -> Result<Algebra> {
        let group = WeylGroup::generate(&spec)?;
        let longest = group.longest_element(&spec);
        Ok(Algebra { spec, group, longest, characters: CharacterCache::default() })
    }

    pub fn named(name: &str) -> Result<Algebra> {
        Algebra::new(rootsys::algebra(name)?)
    }

    /// Built-in name or path to a JSON Cartan file.
    pub fn resolve(name_or_path: &str) -> Result<Algebra> {
        Algebra::new(rootsys::resolve(name_or_path)?)
    }

    pub fn rank(&self) -> usize {
        self.spec.rank
    }

    pub fn name(&self) -> &str {
        &self.spec.name
    }

    pub fn fundamental(&self, j: usize) -> Weight {
        self.spec.fundamental(j)
    }

    /// `w_L Λ` for any weight.
    pub fn lowest(&self, lam: &Weight) -> Weight {
        self.longest.element.act(lam)
    }

    /// True for the A series, recognized from the Cartan matrix.
    pub fn is_type_a(&self) -> bool {
        let r = self.rank();
        (0..r).all(|i| {
            (0..r).all(|j| {
                let expect = match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                };
                self.spec.cartan[i][j] == expect
            })
        })
    }
}
