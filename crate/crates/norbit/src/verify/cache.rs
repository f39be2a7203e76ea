//! Read-shared memo table for weight diagrams, keyed by
//! (type, rank, highest weight). Concurrent readers, single writer.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use norbit_core::weights::{weight_multiplicities, RootSystem, WeightDiagram};
use norbit_core::{ClassicalType, Rat};

type Key = (ClassicalType, u32, Vec<Rat>);

fn table() -> &'static RwLock<HashMap<Key, Arc<WeightDiagram>>> {
    static TABLE: OnceLock<RwLock<HashMap<Key, Arc<WeightDiagram>>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The weight diagram of the irreducible, memoized process-wide.
pub fn cached_diagram(
    rs: &RootSystem,
    lambda: &[Rat],
    dim_bound: u64,
) -> Result<Arc<WeightDiagram>, norbit_core::weights::WeightError> {
    let key = (rs.ty(), rs.rank(), lambda.to_vec());
    if let Some(hit) = table().read().expect("cache lock").get(&key) {
        return Ok(Arc::clone(hit));
    }
    let diagram = Arc::new(weight_multiplicities(rs, lambda, dim_bound)?);
    table()
        .write()
        .expect("cache lock")
        .entry(key)
        .or_insert_with(|| Arc::clone(&diagram));
    Ok(diagram)
}
