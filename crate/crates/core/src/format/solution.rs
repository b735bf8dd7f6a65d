use std::fmt::Write as _;

use crate::pentagon::{classify, ClassificationFlags, PentagonError, PentagonSolution, Property, ThetaTable};

use super::{product_cell, semigroup_from_rows, theta_cell, write_rows, ParseError, ParseErrorKind, Reader};

/// Serializes a solution with its recomputed flags:
///
/// ```text
/// n 3
/// identity 0
/// mul
/// 0 1 2
/// ...
/// theta
/// ...
/// flags idempotent=yes involutive=no ...
/// ```
pub fn write_solution(sol: &PentagonSolution) -> String {
    let s = sol.semigroup();
    let mut out = format!("n {}\n", s.order());
    match s.identity() {
        Some(e) => {
            let _ = writeln!(out, "identity {e}");
        }
        None => out.push_str("identity none\n"),
    }
    out.push_str("mul\n");
    write_rows(&mut out, s.rows());
    out.push_str("theta\n");
    write_rows(&mut out, sol.theta().rows());
    let _ = writeln!(out, "flags {}", classify(sol));
    out
}

/// Reads the format of [`write_solution`]. The table must be a solution, and
/// a `flags` line, when present, must agree with the recomputed flags.
pub fn parse_solution(text: &str) -> Result<PentagonSolution, ParseError> {
    let mut r = Reader::new(text);

    let header = r.next_line("`n <order>`")?;
    header.expect_keyword("n")?;
    header.expect_len(2, "the order")?;
    let n = r.order(&header, 1)?;

    let id_line = r.next_line("`identity <element|none>`")?;
    id_line.expect_keyword("identity")?;
    id_line.expect_len(2, "an element or `none`")?;
    let identity = match id_line.word(1) {
        "none" => None,
        _ => Some(id_line.element(1, n, || "identity".to_string())?),
    };

    let mul_line = r.next_line("`mul`")?;
    mul_line.expect_keyword("mul")?;
    mul_line.expect_len(1, "end of line")?;
    let rows = r.table(n, "a multiplication row", product_cell)?;

    let theta_line = r.next_line("`theta`")?;
    theta_line.expect_keyword("theta")?;
    theta_line.expect_len(1, "end of line")?;
    let theta_rows = r.table(n, "a θ row", theta_cell)?;

    let stored = match r.peek() {
        Some(line) if line.word(0) == "flags" => {
            let line = r.next_line("`flags`")?;
            Some((line.number, parse_flags(&line)?))
        }
        _ => None,
    };
    r.finish()?;

    let s = semigroup_from_rows(rows, identity, (id_line.number, id_line.tokens[1].column))?;
    let theta = ThetaTable::new(theta_rows.into_iter().map(|r| r.1).collect()).expect("rows were range-checked");
    let sol = PentagonSolution::new(s, theta)
        .map_err(|e| ParseError { line: theta_line.number, column: 1, kind: ParseErrorKind::Pentagon(e) })?;
    if let Some((line, stored)) = stored {
        let computed = classify(&sol);
        if stored != computed {
            let kind = ParseErrorKind::Pentagon(PentagonError::FlagMismatch { stored, computed });
            return Err(ParseError { line, column: 1, kind });
        }
    }
    Ok(sol)
}

fn parse_flags(line: &super::Line<'_>) -> Result<ClassificationFlags, ParseError> {
    let mut flags = ClassificationFlags::default();
    let mut seen = Vec::new();
    for i in 1..line.tokens.len() {
        let word = line.word(i);
        let unexpected = || line.at(i, ParseErrorKind::Unexpected { expected: "`<property>=yes|no`", found: word.to_string() });
        let (key, value) = word.split_once('=').ok_or_else(unexpected)?;
        let p: Property = key.parse().map_err(|_| unexpected())?;
        let value = match value {
            "yes" => true,
            "no" => false,
            _ => return Err(unexpected()),
        };
        if seen.contains(&p) {
            return Err(line.at(i, ParseErrorKind::Duplicate(format!("flag {p}"))));
        }
        seen.push(p);
        flags.set(p, value);
    }
    if let Some(p) = Property::ALL.into_iter().find(|p| !seen.contains(p)) {
        return Err(line.error(line.end_column(), ParseErrorKind::Missing(format!("flag {p}"))));
    }
    Ok(flags)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::named;

    fn null_swap() -> PentagonSolution {
        let theta = ThetaTable::new(vec![vec![0, 1, 2], vec![0, 2, 1], vec![0, 2, 1]]).unwrap();
        PentagonSolution::new(named::null_semigroup(3), theta).unwrap()
    }

    #[test]
    fn layout() {
        assert_eq!(
            write_solution(&null_swap()),
            "n 3\nidentity none\nmul\n0 0 0\n0 0 0\n0 0 0\ntheta\n0 1 2\n0 2 1\n0 2 1\n\
             flags idempotent=yes involutive=no nondegenerate=yes commutative=no cocommutative=yes\n"
        );
    }

    #[test]
    fn byte_exact_round_trip() {
        let sol = null_swap();
        let text = write_solution(&sol);
        let back = parse_solution(&text).unwrap();
        assert_eq!(back, sol);
        assert_eq!(write_solution(&back), text);
    }

    #[test]
    fn flags_are_optional_but_checked() {
        let text = write_solution(&null_swap());
        let without: String = text.lines().filter(|l| !l.starts_with("flags")).map(|l| format!("{l}\n")).collect();
        assert_eq!(parse_solution(&without).unwrap(), null_swap());

        let lying = text.replace("involutive=no", "involutive=yes");
        let err = parse_solution(&lying).unwrap_err();
        assert_eq!(err.line, 11);
        assert!(matches!(err.kind, ParseErrorKind::Pentagon(PentagonError::FlagMismatch { .. })));

        let partial = text.replace(" cocommutative=yes", "");
        assert_eq!(parse_solution(&partial).unwrap_err().kind, ParseErrorKind::Missing("flag cocommutative".into()));
        let twice = text.replace("cocommutative=yes", "idempotent=yes");
        assert_eq!(parse_solution(&twice).unwrap_err().kind, ParseErrorKind::Duplicate("flag idempotent".into()));
    }

    #[test]
    fn non_solutions_are_rejected_at_the_theta_section() {
        let text = write_solution(&null_swap()).replace("theta\n0 1 2\n", "theta\n0 1 1\n");
        let err = parse_solution(&text).unwrap_err();
        assert_eq!(err.line, 7);
        assert!(matches!(err.kind, ParseErrorKind::Pentagon(PentagonError::NotASolution(_))));
    }

    #[test]
    fn keywords_are_required_in_order() {
        let err = parse_solution("n 1\nmul\n0\ntheta\n0\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Unexpected { expected: "identity", found: "mul".into() });
        assert!(parse_solution("n 1\nidentity 0\nmul\n0\ntheta\n0\n").is_ok());
    }
}
