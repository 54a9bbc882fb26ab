use std::path::Path;

use anyhow::{bail, Context, Result};
use zkring_core::complex::{
    boundary_simplex, construct_p28_8, cross_polytope, io::read_cplx, polygon, truncated_simplex,
};
use zkring_core::SimplicialComplex;

pub const BUILTINS: &str = "p28-8, polygon:<m>, simplex-boundary:<k>, cross-polytope:<n>, truncated-simplex:<k>:<l>, join:<a>+<b>";

fn number(name: &str, params: &[String], i: usize) -> Result<usize> {
    let raw = params
        .get(i)
        .with_context(|| format!("`{name}` needs {} parameter(s)", i + 1))?;
    raw.parse()
        .with_context(|| format!("`{name}`: parameter `{raw}` is not a non-negative integer"))
}

fn arity(name: &str, params: &[String], n: usize) -> Result<()> {
    if params.len() != n {
        bail!("`{name}` takes {n} parameter(s), got {}", params.len());
    }
    Ok(())
}

/// Builds a named complex. `join` takes two inputs, each a file or builtin.
pub fn builtin(name: &str, params: &[String]) -> Result<SimplicialComplex> {
    let k = match name {
        "p28-8" => {
            arity(name, params, 0)?;
            construct_p28_8()?
        }
        "polygon" => {
            arity(name, params, 1)?;
            polygon(number(name, params, 0)?)?
        }
        "simplex-boundary" => {
            arity(name, params, 1)?;
            boundary_simplex(number(name, params, 0)?)?
        }
        "cross-polytope" => {
            arity(name, params, 1)?;
            cross_polytope(number(name, params, 0)?)?
        }
        "truncated-simplex" => {
            arity(name, params, 2)?;
            truncated_simplex(number(name, params, 0)?, number(name, params, 1)?)?
        }
        "join" => {
            arity(name, params, 2)?;
            let a = resolve(&params[0])?;
            let b = resolve(&params[1])?;
            a.join(&b)?
        }
        other => bail!("unknown complex `{other}`; builtins are {BUILTINS}"),
    };
    Ok(k)
}

/// A `.cplx` path if one exists, else a builtin written `name:param:param`.
/// Joins are written `join:<a>+<b>`.
pub fn resolve(arg: &str) -> Result<SimplicialComplex> {
    let path = Path::new(arg);
    if path.is_file() {
        let parsed = read_cplx(path).with_context(|| format!("reading {arg}"))?;
        return parsed.with_context(|| format!("parsing {arg}"));
    }
    if arg.ends_with(".cplx") {
        bail!("no such file: {arg}");
    }
    if let Some(rest) = arg.strip_prefix("join:") {
        let params: Vec<String> = rest.split('+').map(str::to_owned).collect();
        return builtin("join", &params);
    }
    let mut parts = arg.split(':');
    let name = parts.next().unwrap_or_default();
    let params: Vec<String> = parts.map(str::to_owned).collect();
    builtin(name, &params)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_syntax() {
        assert_eq!(resolve("polygon:5").unwrap().m(), 5);
        assert_eq!(resolve("truncated-simplex:3:2").unwrap().m(), 6);
        assert_eq!(resolve("p28-8").unwrap().facets().len(), 18);
        assert!(resolve("join:polygon:4").is_err());
        assert_eq!(resolve("join:polygon:5+simplex-boundary:1").unwrap().m(), 7);
        assert!(resolve("polygon:x").is_err());
        assert!(resolve("nothing").is_err());
        assert!(resolve("missing.cplx").is_err());
    }

    #[test]
    fn join_of_builtins() {
        let params = ["polygon:5".to_string(), "simplex-boundary:1".to_string()];
        let k = builtin("join", &params).unwrap();
        assert_eq!(k.m(), 7);
        assert_eq!(k.dim(), 2);
    }
}
