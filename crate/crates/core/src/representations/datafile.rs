//! Loading an algebra action from a plain-text matrix file.
//!
//! Format: the first non-comment line is `dim_algebra dim_rep`; every
//! following line is `a row col re im`, one nonzero entry of generator
//! `a`.  Lines starting with `#` and blank lines are ignored.  The
//! generators are re-orthonormalized for the trace pairing on load, and
//! the resulting action is fully validated (anti-Hermitian, traceless,
//! bracket-closed).

use std::path::Path;
use std::sync::Arc;

use crate::algebra::CompactAlgebra;
use crate::error::Error;
use crate::linalg::{cplx, CMat};
use crate::representations::{defining_rep, Representation};
use crate::rootsystem::RootSystem;
use crate::Result;

pub fn load_rep(path: &Path, name: &str, root_system: RootSystem) -> Result<Representation> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::DataFile(format!("{}: {e}", path.display())))?;
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hdr_no, header) = lines
        .next()
        .ok_or_else(|| Error::DataFile(format!("{}: no header line", path.display())))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(Error::DataFile(format!(
            "line {hdr_no}: header must be `dim_algebra dim_rep`, got `{header}`"
        )));
    }
    let dim_algebra: usize = parts[0]
        .parse()
        .map_err(|_| Error::DataFile(format!("line {hdr_no}: bad algebra dimension")))?;
    let dim_rep: usize = parts[1]
        .parse()
        .map_err(|_| Error::DataFile(format!("line {hdr_no}: bad representation dimension")))?;
    if dim_algebra == 0 || dim_rep == 0 {
        return Err(Error::DataFile(format!("line {hdr_no}: dimensions must be positive")));
    }

    let mut matrices = vec![CMat::zeros(dim_rep, dim_rep); dim_algebra];
    for (no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 5 {
            return Err(Error::DataFile(format!(
                "line {no}: expected `a row col re im`, got `{line}`"
            )));
        }
        let a: usize = fields[0]
            .parse()
            .map_err(|_| Error::DataFile(format!("line {no}: bad generator index")))?;
        let row: usize = fields[1]
            .parse()
            .map_err(|_| Error::DataFile(format!("line {no}: bad row index")))?;
        let col: usize = fields[2]
            .parse()
            .map_err(|_| Error::DataFile(format!("line {no}: bad column index")))?;
        let re: f64 = fields[3]
            .parse()
            .map_err(|_| Error::DataFile(format!("line {no}: bad real part")))?;
        let im: f64 = fields[4]
            .parse()
            .map_err(|_| Error::DataFile(format!("line {no}: bad imaginary part")))?;
        if a >= dim_algebra || row >= dim_rep || col >= dim_rep {
            return Err(Error::DataFile(format!(
                "line {no}: index out of range for {dim_algebra} generators of size {dim_rep}"
            )));
        }
        matrices[a][(row, col)] = cplx(re, im);
    }

    let algebra = Arc::new(CompactAlgebra::from_generators(name, matrices, root_system)?);
    let mut rep = defining_rep(&algebra);
    rep.label = format!("{name} (loaded)");
    rep.validate()?;
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::{build_root_system, Family};
    use std::io::Write;

    fn a1() -> RootSystem {
        build_root_system(Family::A, 1).unwrap()
    }

    fn write_file(content: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    const R: &str = "0.7071067811865476";

    #[test]
    fn loads_a_small_closed_action() {
        let content = format!(
            "# three generators on C^2\n\
             3 2\n\
             0 0 0 0 {R}\n\
             0 1 1 0 -{R}\n\
             1 0 1 {R} 0\n\
             1 1 0 -{R} 0\n\
             2 0 1 0 {R}\n\
             2 1 0 0 {R}\n"
        );
        let f = write_file(&content);
        let rep = load_rep(f.path(), "loaded-su2", a1()).unwrap();
        assert_eq!(rep.dim, 2);
        assert_eq!(rep.matrices.len(), 3);
        assert!(rep.algebra.chart.is_none());
    }

    #[test]
    fn rejects_missing_file_and_bad_headers() {
        let missing = load_rep(Path::new("/nonexistent/action.dat"), "x", a1());
        assert!(matches!(missing, Err(Error::DataFile(_))));

        for bad in ["", "3\n", "a 2\n", "0 2\n"] {
            let f = write_file(bad);
            assert!(matches!(load_rep(f.path(), "x", a1()), Err(Error::DataFile(_))));
        }
    }

    #[test]
    fn rejects_malformed_and_out_of_range_entries() {
        for bad in [
            "3 2\n0 0 0 1\n",
            "3 2\n0 0 0 one 0\n",
            "3 2\n5 0 0 1 0\n",
            "3 2\n0 0 7 1 0\n",
        ] {
            let f = write_file(bad);
            assert!(matches!(load_rep(f.path(), "x", a1()), Err(Error::DataFile(_))));
        }
    }

    #[test]
    fn rejects_a_non_closed_generator_set() {
        // Two of the three su(2) directions: the bracket leaves the span.
        let content = format!(
            "2 2\n\
             0 0 1 {R} 0\n\
             0 1 0 -{R} 0\n\
             1 0 1 0 {R}\n\
             1 1 0 0 {R}\n"
        );
        let f = write_file(&content);
        assert!(matches!(
            load_rep(f.path(), "open", a1()),
            Err(Error::InvalidRepresentation(_))
        ));
    }
}
