//! C ABI for the k-tree enumeration engine.
//!
//! The surface is a handful of functions over two opaque handle types plus
//! status codes; the generated header lands in `include/ktree_enum.h`.
//! Conventions:
//!
//! * functions that can fail return a [`KtreeStatus`] and write results
//!   through out-pointers;
//! * counts travel as decimal strings (they exceed 64 bits well before
//!   n = 30); every returned `char*` is owned by the caller and must be
//!   released with [`ktree_string_free`];
//! * tables must be released with [`ktree_table_free`].

use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use ktree_enum::gamma_gf::GammaSeriesTable;
use ktree_enum::oracle;
use ktree_enum::partitions::Partition;
use ktree_enum::table::{compute_table, Engine, EnumerationTable};

/// Result codes for every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KtreeStatus {
    Ok = 0,
    /// A parameter was out of range or malformed (k = 0, wrong partition
    /// weight, null pointer, ...).
    InvalidArgument = 1,
    /// The request is valid but outside an engine's supported scale.
    Unsupported = 2,
    /// An internal invariant failed; indicates a bug, not caller error.
    InternalError = 3,
}

/// Opaque table of counts for one k (see `ktree_table_*`).
pub struct KtreeTable {
    inner: EnumerationTable,
}

fn alloc_string(text: String) -> *mut c_char {
    match CString::new(text) {
        Ok(s) => s.into_raw(),
        Err(_) => std::ptr::null_mut(),
    }
}

/// Computes the counts of unlabeled k-trees with 0..=n_max hedra and hands
/// back an owned table through `out`.
///
/// # Safety
/// `out` must be a valid pointer to writable `*mut KtreeTable` storage.
#[no_mangle]
pub unsafe extern "C" fn ktree_table_compute(
    k: u32,
    n_max: u32,
    out: *mut *mut KtreeTable,
) -> KtreeStatus {
    if out.is_null() {
        return KtreeStatus::InvalidArgument;
    }
    *out = std::ptr::null_mut();
    let result = catch_unwind(|| compute_table(k, n_max as usize, Engine::Gf));
    match result {
        Ok(Ok(table)) => {
            *out = Box::into_raw(Box::new(KtreeTable { inner: table }));
            KtreeStatus::Ok
        }
        Ok(Err(_)) => KtreeStatus::InvalidArgument,
        Err(_) => KtreeStatus::InternalError,
    }
}

/// # Safety
/// `table` must be a live pointer from [`ktree_table_compute`].
#[no_mangle]
pub unsafe extern "C" fn ktree_table_k(table: *const KtreeTable) -> u32 {
    if table.is_null() {
        return 0;
    }
    (&*table).inner.k
}

/// Number of entries (n_max + 1); 0 for a null table.
///
/// # Safety
/// `table` must be null or a live pointer from [`ktree_table_compute`].
#[no_mangle]
pub unsafe extern "C" fn ktree_table_len(table: *const KtreeTable) -> u32 {
    if table.is_null() {
        return 0;
    }
    (&*table).inner.counts.len() as u32
}

/// The count for hedron count `n` as a decimal string, or null when `n` is
/// out of range. Free with [`ktree_string_free`].
///
/// # Safety
/// `table` must be null or a live pointer from [`ktree_table_compute`].
#[no_mangle]
pub unsafe extern "C" fn ktree_table_count_decimal(
    table: *const KtreeTable,
    n: u32,
) -> *mut c_char {
    if table.is_null() {
        return std::ptr::null_mut();
    }
    match (&*table).inner.counts.get(n as usize) {
        Some(count) => alloc_string(count.clone()),
        None => std::ptr::null_mut(),
    }
}

/// The whole table as JSON (`{"k":…,"n_max":…,"engine":…,"counts":[…]}`).
/// Free with [`ktree_string_free`].
///
/// # Safety
/// `table` must be null or a live pointer from [`ktree_table_compute`].
#[no_mangle]
pub unsafe extern "C" fn ktree_table_to_json(table: *const KtreeTable) -> *mut c_char {
    if table.is_null() {
        return std::ptr::null_mut();
    }
    alloc_string((&*table).inner.to_json())
}

/// The whole table as CSV (`n,count` header, LF line endings). Free with
/// [`ktree_string_free`].
///
/// # Safety
/// `table` must be null or a live pointer from [`ktree_table_compute`].
#[no_mangle]
pub unsafe extern "C" fn ktree_table_to_csv(table: *const KtreeTable) -> *mut c_char {
    if table.is_null() {
        return std::ptr::null_mut();
    }
    alloc_string((&*table).inner.to_csv())
}

/// Releases a table. Null is a no-op.
///
/// # Safety
/// `table` must be null or a pointer from [`ktree_table_compute`] that has
/// not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn ktree_table_free(table: *mut KtreeTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Releases a string returned by any `ktree_*` function. Null is a no-op.
///
/// # Safety
/// `s` must be null or an unfreed pointer returned by this library.
#[no_mangle]
pub unsafe extern "C" fn ktree_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Brute-force count of unlabeled k-trees with exactly `n` hedra (the
/// independent oracle; bounds k ≤ 3, n ≤ 5).
///
/// # Safety
/// `out` must be a valid pointer to writable u64 storage.
#[no_mangle]
pub unsafe extern "C" fn ktree_brute_count(k: u32, n: u32, out: *mut u64) -> KtreeStatus {
    if out.is_null() {
        return KtreeStatus::InvalidArgument;
    }
    match catch_unwind(|| oracle::brute_count(k, n)) {
        Ok(Ok(count)) => {
            *out = count;
            KtreeStatus::Ok
        }
        Ok(Err(_)) => KtreeStatus::Unsupported,
        Err(_) => KtreeStatus::InternalError,
    }
}

/// The class-indexed front-rooted series for the partition `parts[0..n_parts]`
/// of k, to the given degree, as a comma-separated decimal string written
/// through `out`. The partition weight must equal k.
///
/// # Safety
/// `parts` must point to `n_parts` readable u32 values and `out` to writable
/// `*mut char` storage.
#[no_mangle]
pub unsafe extern "C" fn ktree_front_rooted_series(
    k: u32,
    parts: *const u32,
    n_parts: usize,
    degree: u32,
    out: *mut *mut c_char,
) -> KtreeStatus {
    if out.is_null() || (parts.is_null() && n_parts > 0) {
        return KtreeStatus::InvalidArgument;
    }
    *out = std::ptr::null_mut();
    let parts = std::slice::from_raw_parts(parts, n_parts).to_vec();
    if parts.contains(&0) || parts.iter().map(|&p| p as u64).sum::<u64>() != k as u64 {
        return KtreeStatus::InvalidArgument;
    }
    let result = catch_unwind(AssertUnwindSafe(|| -> Result<String, ()> {
        let lambda = Partition::new(parts);
        let table = GammaSeriesTable::build(k, degree as usize).map_err(|_| ())?;
        let series = table.front_rooted(&lambda).map_err(|_| ())?;
        let coeffs = series.nonneg_integer_coeffs().map_err(|_| ())?;
        let rendered: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
        Ok(rendered.join(","))
    }));
    match result {
        Ok(Ok(text)) => {
            *out = alloc_string(text);
            KtreeStatus::Ok
        }
        Ok(Err(())) => KtreeStatus::InvalidArgument,
        Err(_) => KtreeStatus::InternalError,
    }
}

/// Library version as a static NUL-terminated string; do not free.
#[no_mangle]
pub extern "C" fn ktree_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
