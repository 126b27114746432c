use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{Field, Polynomial};

/// A polynomial ideal given by generators in `field[X0..X{nvars-1}]`.
///
/// Zero generators are dropped on construction; every stored generator is
/// nonzero and lives in the declared ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    field: Field,
    nvars: usize,
    generators: Vec<Polynomial>,
    homogeneous: bool,
}

impl Ideal {
    pub fn new(field: Field, nvars: usize, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if g.field() != field {
                return Err(Error::FieldMismatch {
                    left: field.to_string(),
                    right: g.field().to_string(),
                });
            }
            if g.nvars() != nvars {
                return Err(Error::Dimension {
                    expected: nvars,
                    found: g.nvars(),
                });
            }
        }
        let generators: Vec<Polynomial> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        let homogeneous = generators.iter().all(Polynomial::is_homogeneous);
        Ok(Ideal {
            field,
            nvars,
            generators,
            homogeneous,
        })
    }

    /// Ideal from a nonempty list of generators, taking the ring from the first.
    pub fn from_generators(generators: Vec<Polynomial>) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::Domain("an ideal needs at least one generator to fix its ring".into()))?;
        let (field, nvars) = (first.field(), first.nvars());
        Self::new(field, nvars, generators)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Apply the simultaneous substitution `X_i -> images[i]` to every generator.
    pub fn substitute_all(&self, images: &[Polynomial]) -> Result<Ideal> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.substitute_all(images))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(self.field, self.nvars, gens)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}
