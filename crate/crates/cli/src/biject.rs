//! `biject`: applies one map of the bijection chain to every line of a file.

use std::fmt::Display;
use std::str::FromStr;

use clap::ValueEnum;
use nlposets::bijections::bicoloured::{
    bicoloured_to_word, word_to_bicoloured, BicolouredPermutation,
};
use nlposets::bijections::decorated::{decorated_decode, decorated_encode, DecoratedPoset};
use nlposets::bijections::lambda::{lambda, lambda_full_inverse, psi};
use nlposets::bijections::stanley::{poset_from_stanley, stanley_from_poset, StanleyGraph};
use nlposets::bijections::word::{decode_word, encode_word, LabelledBinaryWord};
use nlposets::bijections::BijectionError;
use nlposets::perm::Permutation;
use nlposets::Poset;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Map {
    /// {3, 2+2}-free NL poset -> labelled binary word.
    Word,
    /// Labelled binary word -> bicoloured permutation in B.
    Bicoloured,
    /// Bicoloured permutation in B -> permutation avoiding 43-12.
    Lambda,
    /// Permutation avoiding 43-12 and starting with a [3-12 -> bicoloured permutation.
    Psi,
    /// 3-free NL poset -> Stanley graph.
    Stanley,
    /// 3-free NL poset -> decorated poset without isolated elements.
    Decorated,
}

/// Parses `line`, applies `f` and renders the result.
fn apply<A, B, E>(
    line: &str,
    f: impl Fn(&A) -> std::result::Result<B, BijectionError>,
) -> std::result::Result<String, String>
where
    A: FromStr<Err = E>,
    E: Display,
    B: Display,
{
    let a: A = line
        .parse()
        .map_err(|e: E| format!("cannot parse {line:?}: {e}"))?;
    f(&a).map(|b| b.to_string()).map_err(|e| e.to_string())
}

fn map_line(map: Map, inverse: bool, line: &str) -> std::result::Result<String, String> {
    match (map, inverse) {
        (Map::Word, false) => apply::<Poset, _, _>(line, encode_word),
        (Map::Word, true) => apply::<LabelledBinaryWord, _, _>(line, decode_word),
        (Map::Bicoloured, false) => {
            apply::<LabelledBinaryWord, _, _>(line, |w| Ok(word_to_bicoloured(w)))
        }
        (Map::Bicoloured, true) => apply::<BicolouredPermutation, _, _>(line, bicoloured_to_word),
        (Map::Lambda, false) => apply::<BicolouredPermutation, _, _>(line, lambda),
        (Map::Lambda, true) => apply::<Permutation, _, _>(line, lambda_full_inverse),
        (Map::Psi, false) => apply::<Permutation, _, _>(line, psi),
        (Map::Psi, true) => apply::<BicolouredPermutation, _, _>(line, lambda),
        (Map::Stanley, false) => apply::<Poset, _, _>(line, stanley_from_poset),
        (Map::Stanley, true) => apply::<StanleyGraph, _, _>(line, poset_from_stanley),
        (Map::Decorated, false) => apply::<Poset, _, _>(line, decorated_encode),
        (Map::Decorated, true) => apply::<DecoratedPoset, _, _>(line, decorated_decode),
    }
}

/// Maps every non-blank, non-`#` line of `input`; comment lines are copied.
pub fn run(map: Map, inverse: bool, input: &str) -> Result<String> {
    let mut out = String::new();
    for (i, raw) in input.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('#') {
            out.push_str(line);
        } else {
            let mapped = map_line(map, inverse, line)
                .map_err(|e| CliError::Failed(format!("line {}: {e}", i + 1)))?;
            out.push_str(&mapped);
        }
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_of_maps() {
        let poset = "9; 2<4,1<7,2<7,5<7,6<7,1<8,2<8,5<8,1<9,2<9,5<9,6<9\n";
        let word = run(Map::Word, false, poset).unwrap();
        assert_eq!(word, "0:2 1:4 0:5 0:1 1:8 0:6 1:7 1:9 0:3\n");
        let coloured = run(Map::Bicoloured, false, &word).unwrap();
        assert_eq!(coloured, "2b 4r 5b 1b 8r 6b 7r 9r 3b\n");
        assert_eq!(run(Map::Bicoloured, true, &coloured).unwrap(), word);
        let perm = run(Map::Lambda, false, &coloured).unwrap();
        assert_eq!(run(Map::Lambda, true, &perm).unwrap(), coloured);
        assert_eq!(run(Map::Word, true, &word).unwrap(), poset);
    }

    #[test]
    fn errors_name_the_line() {
        let e = run(Map::Stanley, false, "# chain\n3; 1<2,2<3\n").unwrap_err();
        assert!(e.to_string().starts_with("line 2:"), "{e}");
        assert_eq!(e.exit_code(), 1);
    }
}
