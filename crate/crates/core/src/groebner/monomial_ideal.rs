use std::fmt;

use crate::poly::Monomial;

/// A monomial ideal stored by its minimal generators.
///
/// Generators are kept in descending exponent-vector order so that two
/// ideals are equal exactly when their minimal generating sets agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, generators: impl IntoIterator<Item = Monomial>) -> Self {
        let mut gens: Vec<Monomial> = generators.into_iter().collect();
        debug_assert!(gens.iter().all(|g| g.nvars() == nvars));
        gens.sort();
        gens.dedup();
        let minimal: Vec<Monomial> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && h.divides(g)))
            .cloned()
            .collect();
        let mut generators = minimal;
        generators.reverse();
        MonomialIdeal { nvars, generators }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Squarefree iff every minimal generator has all exponents at most one.
    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.iter().copied())
    }

    #[test]
    fn keeps_minimal_generators() {
        let i = MonomialIdeal::new(3, [m(&[1, 1, 0]), m(&[1, 1, 1]), m(&[0, 2, 0]), m(&[1, 1, 0])]);
        assert_eq!(i.generators(), &[m(&[1, 1, 0]), m(&[0, 2, 0])]);
        assert!(!i.is_squarefree());
        assert!(i.contains(&m(&[2, 1, 0])));
        assert!(!i.contains(&m(&[1, 0, 5])));
    }

    #[test]
    fn squarefree_detection() {
        assert!(!MonomialIdeal::new(2, [m(&[0, 2])]).is_squarefree());
        assert!(MonomialIdeal::new(2, [m(&[1, 1])]).is_squarefree());
    }
}
