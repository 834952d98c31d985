use std::path::Path;

use cqf_core::{parse_graph, ADPattern, Composition, RibbonDiagram, RibbonTableau};

use crate::error::CliError;

/// Inline tokens joined by spaces, with `;` as a line break; or a file.
pub fn read_source(tokens: &[String], file: Option<&Path>) -> Result<String, CliError> {
    match (tokens.is_empty(), file) {
        (false, None) => Ok(tokens.join(" ").replace(';', "\n")),
        (true, Some(path)) => std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        (false, Some(_)) => Err(CliError::Usage("give an inline input or --file, not both".into())),
        (true, None) => Err(CliError::Usage("no input given".into())),
    }
}

/// `4` or `n=4`.
pub fn parse_n(token: &str) -> Result<usize, CliError> {
    let t = token.trim();
    let digits = t.strip_prefix("n=").unwrap_or(t);
    digits
        .parse()
        .map_err(|_| CliError::Usage(format!("expected n=<int>, got {token:?}")))
}

/// Any mix of `5`, `n=5` and `3..8` (inclusive).
pub fn parse_n_list(tokens: &[String]) -> Result<Vec<usize>, CliError> {
    let mut out = Vec::new();
    for token in tokens {
        match token.split_once("..") {
            Some((lo, hi)) => {
                let (lo, hi) = (parse_n(lo)?, parse_n(hi)?);
                if lo > hi {
                    return Err(CliError::Usage(format!("empty range {token:?}")));
                }
                out.extend(lo..=hi);
            }
            None => out.push(parse_n(token)?),
        }
    }
    Ok(out)
}

/// `pattern=adad`, `composition=2,2,1`, a bare composition, or any graph
/// input describing a path.
pub fn parse_ribbon(text: &str) -> Result<RibbonDiagram, CliError> {
    let t = text.trim();
    if let Some(w) = t.strip_prefix("pattern=") {
        let w: ADPattern = w.trim().parse()?;
        return Ok(RibbonDiagram::from_pattern(&w));
    }
    let bare = t.strip_prefix("composition=").unwrap_or(t);
    if bare.starts_with(|c: char| c.is_ascii_digit() || c == '(') && !bare.contains('\n') && !bare.starts_with("n=") {
        let alpha: Composition = bare.parse()?;
        return Ok(RibbonDiagram::from_composition(&alpha));
    }
    let g = parse_graph(t)?;
    Ok(RibbonDiagram::of_path(&g)?)
}

/// Rows bottom-up, `|` between rows and `,` between entries.
pub fn parse_tableau(text: &str) -> Result<RibbonTableau, CliError> {
    let rows = text
        .split('|')
        .map(|row| {
            row.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<u32>()
                        .map_err(|_| CliError::Usage(format!("bad tableau entry {:?}", x.trim())))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let refs: Vec<&[u32]> = rows.iter().map(Vec::as_slice).collect();
    Ok(RibbonTableau::from_rows(&refs)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_sources() {
        let tokens: Vec<String> = ["n=3;", "1", "2;", "2", "3"].iter().map(|s| s.to_string()).collect();
        let g = parse_graph(&read_source(&tokens, None).unwrap()).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(read_source(&[], None).is_err());
    }

    #[test]
    fn vertex_counts() {
        assert_eq!(parse_n("n=4").unwrap(), 4);
        assert_eq!(parse_n("7").unwrap(), 7);
        assert!(parse_n("four").is_err());
        let ns = parse_n_list(&["3..5".into(), "n=8".into()]).unwrap();
        assert_eq!(ns, vec![3, 4, 5, 8]);
        assert!(parse_n_list(&["5..3".into()]).is_err());
    }

    #[test]
    fn ribbon_inputs_agree() {
        let from_pattern = parse_ribbon("pattern=adad").unwrap();
        assert_eq!(from_pattern.composition().to_string(), "(2,2,1)");
        assert_eq!(parse_ribbon("composition=2,2,1").unwrap(), from_pattern);
        assert_eq!(parse_ribbon("(2,2,1)").unwrap(), from_pattern);
        let path = parse_ribbon("path: 3 4 1 2").unwrap();
        assert_eq!(path.composition().to_string(), "(2,2)");
        assert!(parse_ribbon("pattern=adx").is_err());
    }

    #[test]
    fn tableaux_round_trip_through_display() {
        let t = parse_tableau("1,2,5 | 1,6,7 | 1,3,4,8").unwrap();
        assert_eq!(t.to_string(), "1,2,5 | 1,6,7 | 1,3,4,8");
        assert!(parse_tableau("1,x").is_err());
    }
}
