use crate::error::{Error, Result};
use crate::order::{Grading, WordOrder};
use crate::parse::{self, render_poly};
use crate::poly::Poly;
use crate::scalar::Field;
use crate::word::Word;

/// Ambient free algebra plus a list of relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub field: Field,
    pub names: Vec<String>,
    pub grading: Grading,
    pub order: WordOrder,
    pub relations: Vec<Poly>,
}

impl Presentation {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(parse::parse_presentation(text)?)
    }

    pub fn new(field: Field, names: Vec<String>, order: WordOrder, relations: Vec<Poly>) -> Result<Self> {
        if names.len() != order.nvars() {
            return Err(Error::Invalid("order and generator list disagree".into()));
        }
        if relations.iter().any(Poly::is_zero) {
            return Err(Error::Invalid("relation is the zero polynomial".into()));
        }
        Ok(Presentation { field, names, grading: order.grading().clone(), order, relations })
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn gen(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn poly(&self, text: &str) -> Result<Poly> {
        Ok(parse::parse_poly(text, &self.names, self.field)?)
    }

    pub fn word(&self, text: &str) -> Result<Word> {
        Ok(parse::parse_word(text, &self.names, self.field)?)
    }

    pub fn render(&self, f: &Poly) -> String {
        render_poly(f, &self.names, &self.order)
    }

    pub fn render_word(&self, w: &Word) -> String {
        w.render(&self.names)
    }

    pub fn render_relation(&self, i: usize) -> String {
        self.render(&self.relations[i])
    }

    pub fn with_relations(&self, relations: Vec<Poly>) -> Presentation {
        Presentation { relations, ..self.clone() }
    }

    /// Canonical file form; parses back to an equal presentation.
    pub fn to_text(&self) -> String {
        let mut s = format!("field {}\ngens {}\n", self.field, self.names.join(" "));
        if !self.grading.is_uniform() {
            let ws: Vec<String> = self.grading.weights().iter().map(|w| w.to_string()).collect();
            s.push_str(&format!("deg {}\n", ws.join(" ")));
        }
        let prec: Vec<&str> = self.order.precedence().iter().map(|&g| self.names[g].as_str()).collect();
        s.push_str(&format!("order {} {}\n", self.order.kind().name(), prec.join(" ")));
        for r in &self.relations {
            s.push_str(&format!("rel {}\n", self.render(r)));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let text = "field F7\ngens a b c\ndeg 1 1 3\norder degrevlex b a c\nrel c*b + 4*b*c + a^3\nrel a*b\n";
        let p = Presentation::parse(text).unwrap();
        assert_eq!(Presentation::parse(&p.to_text()).unwrap(), p);
        assert_eq!(p.to_text(), text);
    }
}
