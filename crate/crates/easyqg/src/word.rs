//! Two-coloured words: strings over {white, black} that label the tensor legs
//! of the fundamental representation (white = u, black = the conjugate ū).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One of the two point colours.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Colour {
    White,
    Black,
}

impl Colour {
    /// The other colour.
    pub fn flipped(self) -> Colour {
        match self {
            Colour::White => Colour::Black,
            Colour::Black => Colour::White,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Colour::White => 'w',
            Colour::Black => 'b',
        }
    }
}

/// A finite sequence of colours. Length 0 is the legal empty word.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Word {
    colours: Vec<Colour>,
}

impl Word {
    pub fn new(colours: Vec<Colour>) -> Word {
        Word { colours }
    }

    /// The empty word.
    pub fn empty() -> Word {
        Word::default()
    }

    /// All-white word of the given length.
    pub fn all_white(len: usize) -> Word {
        Word {
            colours: vec![Colour::White; len],
        }
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    pub fn colour(&self, position: usize) -> Colour {
        self.colours[position]
    }

    /// True if every position is white.
    pub fn is_all_white(&self) -> bool {
        self.colours.iter().all(|c| *c == Colour::White)
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut colours = self.colours.clone();
        colours.extend_from_slice(&other.colours);
        Word { colours }
    }

    /// Elementwise colour flip `w ↦ w̄`.
    pub fn bar(&self) -> Word {
        Word {
            colours: self.colours.iter().map(|c| c.flipped()).collect(),
        }
    }

    /// The involution `w ↦ w*`: read backwards with colours inverted.
    pub fn involution(&self) -> Word {
        Word {
            colours: self.colours.iter().rev().map(|c| c.flipped()).collect(),
        }
    }

    /// Word with every colour forced to white, keeping the length.
    pub fn coerced_white(&self) -> Word {
        Word::all_white(self.len())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Grammar: `word := "-" | [wb]+`.
    fn from_str(text: &str) -> Result<Word> {
        if text == "-" {
            return Ok(Word::empty());
        }
        if text.is_empty() {
            return Err(Error::WordSyntax {
                found: '\0',
                position: 0,
            });
        }
        let mut colours = Vec::with_capacity(text.len());
        for (position, ch) in text.chars().enumerate() {
            match ch {
                'w' => colours.push(Colour::White),
                'b' => colours.push(Colour::Black),
                found => return Err(Error::WordSyntax { found, position }),
            }
        }
        Ok(Word { colours })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        for c in &self.colours {
            write!(f, "{}", c.as_char())?;
        }
        Ok(())
    }
}
