use crate::chartable::CharacterTable;
use crate::error::TableError;
use crate::group::PermGroup;
use crate::rationality::{classify, GaloisModel, RationalityReport};

/// Everything computed for one group: its table, both Galois actions and
/// the rationality report.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub group: PermGroup,
    pub table: CharacterTable,
    pub model: GaloisModel,
    pub report: RationalityReport,
}

impl Analysis {
    pub fn run(group: PermGroup) -> Result<Analysis, TableError> {
        let table = CharacterTable::compute(&group)?;
        let model = GaloisModel::build(&table)?;
        let report = classify(&table, &model);
        Ok(Analysis {
            group,
            table,
            model,
            report,
        })
    }

    pub fn name(&self) -> &str {
        self.group.name()
    }
}
