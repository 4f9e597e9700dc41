//! Curve files: `p = <prime>; f = <polynomial in t and x>`. Statements are
//! separated by `;` or newlines, `#` starts a comment.

use std::path::Path;

use scrollar::exactalg::bipoly::BiPoly;
use scrollar::exactalg::text::parse_mpoly;
use scrollar::exactalg::PrimeField;
use scrollar::funfield::CoverModel;

use crate::{LabError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveFile {
    pub p: u64,
    pub f: String,
}

impl CurveFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = None;
        let mut f = None;
        let stripped: String = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .collect::<Vec<_>>()
            .join(";");
        for stmt in stripped.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = stmt
                .split_once('=')
                .ok_or_else(|| LabError::Usage(format!("expected `key = value`, found `{stmt}`")))?;
            let (key, value) = (key.trim(), value.trim());
            let slot = match key {
                "p" => &mut p,
                "f" => &mut f,
                other => return Err(LabError::Usage(format!("unknown key `{other}`"))),
            };
            if slot.replace(value.to_string()).is_some() {
                return Err(LabError::Usage(format!("key `{key}` given twice")));
            }
        }
        let p = p.ok_or_else(|| LabError::Usage("missing key `p`".into()))?;
        let p = p.parse::<u64>().map_err(|_| LabError::Usage(format!("`p = {p}` is not an integer")))?;
        let f = f.ok_or_else(|| LabError::Usage("missing key `f`".into()))?;
        Ok(CurveFile { p, f })
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| LabError::Io { path: path.display().to_string(), source })?;
        CurveFile::parse(&text)
    }

    pub fn field(&self) -> Result<PrimeField> {
        Ok(PrimeField::new(self.p)?)
    }

    pub fn model(&self, assert_irreducible: bool, seed: u64) -> Result<CoverModel> {
        let field = self.field()?;
        let m = parse_mpoly(field, &self.f)?;
        let f = BiPoly::from_mpoly(&m, 0, 2)?;
        Ok(CoverModel::validate(f, assert_irreducible, seed)?)
    }

    pub fn from_model(model: &CoverModel) -> Self {
        CurveFile { p: model.field().p(), f: model.to_text() }
    }

    pub fn to_text(&self) -> String {
        format!("p = {}; f = {}\n", self.p, self.f)
    }
}

pub fn load_model(path: &Path, assert_irreducible: bool, seed: u64) -> Result<CoverModel> {
    CurveFile::read(path)?.model(assert_irreducible, seed)
}
