use super::{Poset, PosetError, Var, VariableAssignment};

/// Parses the line-oriented poset format:
///
/// ```text
/// # comment
/// elements 4
/// cover 1 2
/// cover 1 3
/// cover 2 4
/// cover 3 4
/// assign a 2 3
/// ```
///
/// `elements` must come first. Elements named by `assign a` are tagged with
/// the first variable, every other element with the second.
pub fn parse_poset_file(text: &str) -> Result<(Poset, VariableAssignment), PosetError> {
    let mut size: Option<usize> = None;
    let mut relations = Vec::new();
    let mut folds = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or_default();
        let mut fields = content.split_whitespace();
        let Some(keyword) = fields.next() else {
            continue;
        };
        let err = |message: String| PosetError::Parse { line, message };
        let args: Vec<&str> = fields.collect();

        let Some(c) = size else {
            if keyword != "elements" {
                return Err(err(format!("expected `elements <c>` first, found `{keyword}`")));
            }
            let [count] = args[..] else {
                return Err(err("`elements` takes exactly one argument".into()));
            };
            let c = parse_index(count).map_err(err)?;
            if c == 0 {
                return Err(err("a poset needs at least one element".into()));
            }
            size = Some(c);
            continue;
        };

        match keyword {
            "elements" => return Err(err("duplicate `elements` line".into())),
            "cover" => {
                let [j, k] = args[..] else {
                    return Err(err("`cover` takes exactly two elements".into()));
                };
                let j = parse_element(j, c).map_err(err)?;
                let k = parse_element(k, c).map_err(err)?;
                relations.push((j, k));
            }
            "assign" => {
                let Some((&var, elems)) = args.split_first() else {
                    return Err(err("`assign` needs a variable and elements".into()));
                };
                if var != "a" {
                    return Err(err(format!("only `assign a` is supported, found `assign {var}`")));
                }
                for e in elems {
                    folds.push(parse_element(e, c).map_err(err)?);
                }
            }
            other => return Err(err(format!("unknown directive `{other}`"))),
        }
    }

    let c = size.ok_or(PosetError::Parse {
        line: text.lines().count().max(1),
        message: "missing `elements <c>` line".into(),
    })?;
    let poset = Poset::new(c, relations)?;
    let mut tags = vec![Var::B; c];
    for j in folds {
        tags[j - 1] = Var::A;
    }
    Ok((poset, VariableAssignment::new(tags)))
}

fn parse_index(s: &str) -> Result<usize, String> {
    s.parse::<usize>()
        .map_err(|_| format!("`{s}` is not a nonnegative integer"))
}

fn parse_element(s: &str, c: usize) -> Result<usize, String> {
    let e = parse_index(s)?;
    if (1..=c).contains(&e) {
        Ok(e)
    } else {
        Err(format!("element {e} is outside 1..={c}"))
    }
}
