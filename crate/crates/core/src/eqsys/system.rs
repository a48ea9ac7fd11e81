use std::fmt;

use serde::Serialize;

use super::EqsysError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantifier {
    #[serde(rename = "forall")]
    Universal,
    #[serde(rename = "exists")]
    Existential,
}

impl Quantifier {
    pub fn keyword(self) -> &'static str {
        match self {
            Quantifier::Universal => "forall",
            Quantifier::Existential => "exists",
        }
    }
}

/// A nonempty sequence of symbol indices.
pub type Word = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Equality {
    pub lhs: Word,
    pub rhs: Word,
}

impl Equality {
    pub fn new(lhs: Word, rhs: Word) -> Self {
        Equality { lhs, rhs }
    }

    pub fn symbols(&self) -> impl Iterator<Item = usize> + '_ {
        self.lhs.iter().chain(&self.rhs).copied()
    }

    pub fn is_trivial(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// A block of consecutive symbols under one quantifier.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub quantifier: Quantifier,
    pub symbols: Vec<usize>,
}

/// A prenex sentence: quantifier prefix over a conjunction of equalities.
///
/// Symbols are numbered by their position in the prefix, so symbol `i` is
/// quantified before symbol `j` exactly when `i < j`. Adjacent blocks with
/// the same quantifier are merged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationSystem {
    names: Vec<String>,
    quantifiers: Vec<Quantifier>,
    equalities: Vec<Equality>,
    source_text: String,
}

impl EquationSystem {
    /// Builds and validates a system from its parts. Symbols are given in
    /// quantifier order.
    pub fn from_parts(
        symbols: Vec<(String, Quantifier)>,
        equalities: Vec<Equality>,
        source_text: Option<String>,
    ) -> Result<Self, EqsysError> {
        let mut names = Vec::with_capacity(symbols.len());
        let mut quantifiers = Vec::with_capacity(symbols.len());
        for (name, q) in symbols {
            if names.contains(&name) {
                return Err(EqsysError::DuplicateQuantification(name));
            }
            names.push(name);
            quantifiers.push(q);
        }
        if equalities.is_empty() {
            return Err(EqsysError::NoEqualities);
        }
        for eq in &equalities {
            if eq.lhs.is_empty() || eq.rhs.is_empty() {
                return Err(EqsysError::EmptyWord { line: 0, column: 0 });
            }
            if let Some(bad) = eq.symbols().find(|&s| s >= names.len()) {
                return Err(EqsysError::UnquantifiedSymbol(format!("#{bad}")));
            }
        }
        let mut system = EquationSystem { names, quantifiers, equalities, source_text: String::new() };
        system.source_text = source_text.unwrap_or_else(|| system.to_string());
        Ok(system)
    }

    pub fn symbol_count(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, symbol: usize) -> &str {
        &self.names[symbol]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn symbol_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn quantifier(&self, symbol: usize) -> Quantifier {
        self.quantifiers[symbol]
    }

    pub fn equalities(&self) -> &[Equality] {
        &self.equalities
    }

    pub fn source_text(&self) -> &str {
        &self.source_text
    }

    pub fn blocks(&self) -> Vec<Block> {
        let mut blocks: Vec<Block> = Vec::new();
        for (i, &q) in self.quantifiers.iter().enumerate() {
            match blocks.last_mut() {
                Some(b) if b.quantifier == q => b.symbols.push(i),
                _ => blocks.push(Block { quantifier: q, symbols: vec![i] }),
            }
        }
        blocks
    }

    /// Symbols quantified strictly after `symbol`.
    pub fn later_symbols(&self, symbol: usize) -> std::ops::Range<usize> {
        symbol + 1..self.names.len()
    }

    /// Universally quantified symbols in prefix order.
    pub fn parameters(&self) -> Vec<usize> {
        self.symbols_with(Quantifier::Universal)
    }

    /// Existentially quantified symbols in prefix order.
    pub fn variables(&self) -> Vec<usize> {
        self.symbols_with(Quantifier::Existential)
    }

    fn symbols_with(&self, q: Quantifier) -> Vec<usize> {
        (0..self.names.len()).filter(|&i| self.quantifiers[i] == q).collect()
    }

    pub fn is_existential(&self) -> bool {
        self.quantifiers.iter().all(|&q| q == Quantifier::Existential)
    }

    pub fn word_text(&self, word: &[usize]) -> String {
        word.iter().map(|&s| self.names[s].as_str()).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for EquationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let names: Vec<&str> = block.symbols.iter().map(|&s| self.names[s].as_str()).collect();
            write!(f, "{} {}", block.quantifier.keyword(), names.join(", "))?;
        }
        f.write_str(" :")?;
        for (i, eq) in self.equalities.iter().enumerate() {
            if i > 0 {
                f.write_str(" &")?;
            }
            write!(f, " {} = {}", self.word_text(&eq.lhs), self.word_text(&eq.rhs))?;
        }
        Ok(())
    }
}
