//! Locating algebras, modules and classes named on the command line.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use gorenlab::class::ClassSpec;
use gorenlab::corpus::{corpus, CorpusCase};
use gorenlab::module::{module_header, parse_module, Module};
use gorenlab::quiver::PathAlgebra;

/// Usage and input errors; they map to exit code 2.
#[derive(Debug)]
pub struct Fail(pub String);

impl<E: std::fmt::Display> From<E> for Fail {
    fn from(e: E) -> Fail {
        Fail(e.to_string())
    }
}

pub fn read(path: &Path) -> Result<String, Fail> {
    std::fs::read_to_string(path).map_err(|e| Fail(format!("{}: {e}", path.display())))
}

fn algebra_name(text: &str) -> Option<String> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .and_then(|l| {
            let w: Vec<&str> = l.split_whitespace().collect();
            (w.len() >= 2 && w[0] == "algebra").then(|| w[1].to_string())
        })
}

/// The working algebra: its text, the parsed algebra, and the corpus case
/// sharing its name (for class names such as `PX`).
pub struct Context {
    pub text: String,
    pub alg: Arc<PathAlgebra>,
    pub case: Option<CorpusCase>,
}

impl Context {
    pub fn from_text(text: String) -> Result<Context, Fail> {
        let alg = PathAlgebra::from_text(&text)?;
        let case = corpus().into_iter().find(|c| algebra_name(&c.algebra).as_deref() == Some(alg.name()));
        Ok(Context { text, alg, case })
    }

    /// Resolve the algebra for a module file: an explicit `--algebra`, else
    /// `<dir>/<name>.alg`, else any `.alg` beside it with that name, else the
    /// corpus algebra of that name.
    pub fn for_module(module_file: &Path, explicit: Option<&Path>) -> Result<Context, Fail> {
        if let Some(p) = explicit {
            return Context::from_text(read(p)?);
        }
        let (_, name) = module_header(&read(module_file)?)?;
        let dir = module_file.parent().map(Path::to_path_buf).unwrap_or_else(|| PathBuf::from("."));
        let dir = if dir.as_os_str().is_empty() { PathBuf::from(".") } else { dir };
        let direct = dir.join(format!("{name}.alg"));
        if direct.is_file() {
            return Context::from_text(read(&direct)?);
        }
        if let Ok(entries) = std::fs::read_dir(&dir) {
            let mut files: Vec<PathBuf> = entries
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "alg"))
                .collect();
            files.sort();
            for f in files {
                let text = read(&f)?;
                if algebra_name(&text).as_deref() == Some(name.as_str()) {
                    return Context::from_text(text);
                }
            }
        }
        if let Some(c) = corpus().into_iter().find(|c| algebra_name(&c.algebra).as_deref() == Some(name.as_str())) {
            return Context::from_text(c.algebra.clone());
        }
        Err(Fail(format!("cannot find algebra `{name}`; pass --algebra FILE")))
    }

    pub fn module(&self, path: &Path) -> Result<(String, Module), Fail> {
        Ok(parse_module(&read(path)?, &self.alg)?)
    }

    /// `proj`, `inj`, a class of the matching corpus case, or a
    /// comma-separated list of module files.
    pub fn class(&self, spec: &str, cap: u64) -> Result<ClassSpec, Fail> {
        let alg = &self.alg;
        if let Some(case) = &self.case {
            if let Some((name, gens)) = case.classes.iter().find(|(n, _)| n == spec) {
                let mut mods = Vec::new();
                for g in gens {
                    let text = case
                        .modules
                        .iter()
                        .find(|t| module_header(t).is_ok_and(|(n, _)| &n == g))
                        .ok_or_else(|| Fail(format!("corpus class `{name}` lacks module `{g}`")))?;
                    mods.push(parse_module(text, alg)?.1);
                }
                return Ok(ClassSpec::new(name, alg, mods, cap)?);
            }
        }
        let n = alg.num_vertices();
        match spec {
            "proj" => return Ok(ClassSpec::new("proj", alg, (0..n).map(|v| Module::projective(alg, v)).collect(), cap)?),
            "inj" => return Ok(ClassSpec::new("inj", alg, (0..n).map(|v| Module::injective(alg, v)).collect(), cap)?),
            _ => {}
        }
        let mut mods = Vec::new();
        for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let p = Path::new(part);
            if !p.is_file() {
                return Err(Fail(format!("class `{spec}`: not proj, inj, a corpus class, or a module file list")));
            }
            mods.push(self.module(p)?.1);
        }
        Ok(ClassSpec::new(spec, alg, mods, cap)?)
    }
}
