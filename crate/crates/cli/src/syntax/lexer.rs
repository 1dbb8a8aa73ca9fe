use super::{is_word_char, Diagnostic, Loc};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Word(String),
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Semi,
    Eq,
    Star,
    Arrow,
    Colon,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Word(w) => format!("'{w}'"),
            Tok::LBrace => "'{'".into(),
            Tok::RBrace => "'}'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Semi => "';'".into(),
            Tok::Eq => "'='".into(),
            Tok::Star => "'*'".into(),
            Tok::Arrow => "'->'".into(),
            Tok::Colon => "':'".into(),
        }
    }
}

pub(crate) fn lex(text: &str) -> Result<Vec<(Tok, Loc)>, Diagnostic> {
    let mut out = Vec::new();
    for (i, line) in text.split('\n').enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut j = 0;
        while j < chars.len() {
            let c = chars[j];
            let loc = Loc {
                line: i + 1,
                col: j + 1,
            };
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                j += 1;
                continue;
            }
            if is_word_char(c) {
                let start = j;
                while j < chars.len() && is_word_char(chars[j]) {
                    j += 1;
                }
                out.push((Tok::Word(chars[start..j].iter().collect()), loc));
                continue;
            }
            let tok = match c {
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ',' => Tok::Comma,
                ';' => Tok::Semi,
                '=' => Tok::Eq,
                '*' => Tok::Star,
                ':' => Tok::Colon,
                '-' if chars.get(j + 1) == Some(&'>') => {
                    j += 1;
                    Tok::Arrow
                }
                _ => return Err(Diagnostic::error(loc, format!("unexpected character {c:?}"))),
            };
            j += 1;
            out.push((tok, loc));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_and_comments() {
        let toks = lex("rel m : X * X -> X { # table\n (e, a) -> a }").unwrap();
        let kinds: Vec<Tok> = toks.iter().map(|(t, _)| t.clone()).collect();
        assert_eq!(kinds[0], Tok::Word("rel".into()));
        assert!(kinds.contains(&Tok::Arrow));
        assert!(!kinds.contains(&Tok::Word("table".into())));
        let (_, loc) = toks.iter().find(|(t, _)| *t == Tok::LParen).unwrap();
        assert_eq!((loc.line, loc.col), (2, 2));
    }

    #[test]
    fn stray_characters_are_located() {
        let err = lex("set X = {\n a - b }").unwrap_err();
        assert_eq!((err.loc.line, err.loc.col), (2, 4));
    }
}
