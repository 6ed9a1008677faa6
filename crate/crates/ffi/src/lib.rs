//! C interface to `exlab`.
//!
//! Graphs are opaque `ExlabGraph` handles owned by the caller and released
//! with `exlab_graph_free`. Every fallible call returns an `ExlabStatus`;
//! on failure `exlab_last_error_message` describes the last error raised on
//! the calling thread. Strings handed out by the library are released with
//! `exlab_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use exlab::determining::{determining_number, is_determining};
use exlab::exchange::exchange_property;
use exlab::graph::{generate, parse_graph6, write_graph6, Family, FamilySpec};
use exlab::resolving::{is_resolving, metric_dimension};
use exlab::system::DEFAULT_BUDGET;
use exlab::{Budget, Error, Graph, SetKind, VertexSet};

/// Result codes. Zero is success.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExlabStatus {
    Ok = 0,
    Parameter = 1,
    Format = 2,
    Argument = 3,
    Domain = 4,
    Size = 5,
    Budget = 6,
    Internal = 7,
    NullPointer = 8,
    InvalidUtf8 = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExlabKind {
    Determining = 0,
    Resolving = 1,
}

impl From<ExlabKind> for SetKind {
    fn from(k: ExlabKind) -> SetKind {
        match k {
            ExlabKind::Determining => SetKind::Determining,
            ExlabKind::Resolving => SetKind::Resolving,
        }
    }
}

/// Opaque graph handle.
pub struct ExlabGraph(Graph);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = text);
}

fn status_of(e: &Error) -> ExlabStatus {
    match e {
        Error::Parameter(_) => ExlabStatus::Parameter,
        Error::Format(_) => ExlabStatus::Format,
        Error::Argument(_) => ExlabStatus::Argument,
        Error::Domain(_) => ExlabStatus::Domain,
        Error::Size(_) => ExlabStatus::Size,
        Error::Budget { .. } => ExlabStatus::Budget,
        Error::Internal(_) => ExlabStatus::Internal,
    }
}

enum Failure {
    Lib(Error),
    Null(&'static str),
    Utf8,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

/// Runs `body`, turning errors and panics into a status code.
fn guarded(body: impl FnOnce() -> Result<(), Failure>) -> ExlabStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => ExlabStatus::Ok,
        Ok(Err(Failure::Lib(e))) => {
            set_last_error(&e.to_string());
            status_of(&e)
        }
        Ok(Err(Failure::Null(what))) => {
            set_last_error(&format!("null pointer passed for {what}"));
            ExlabStatus::NullPointer
        }
        Ok(Err(Failure::Utf8)) => {
            set_last_error("string argument is not valid UTF-8");
            ExlabStatus::InvalidUtf8
        }
        Err(_) => {
            set_last_error("panic inside exlab");
            ExlabStatus::Internal
        }
    }
}

unsafe fn graph_ref<'a>(g: *const ExlabGraph) -> Result<&'a Graph, Failure> {
    g.as_ref().map(|h| &h.0).ok_or(Failure::Null("graph"))
}

unsafe fn c_str<'a>(s: *const c_char, what: &'static str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure::Null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Failure::Utf8)
}

unsafe fn vertex_set(g: &Graph, ids: *const u32, len: usize) -> Result<VertexSet, Failure> {
    if len == 0 {
        return Ok(VertexSet::EMPTY);
    }
    if ids.is_null() {
        return Err(Failure::Null("vertex ids"));
    }
    let ids: Vec<usize> = std::slice::from_raw_parts(ids, len).iter().map(|&v| v as usize).collect();
    Ok(VertexSet::from_ids(g.n(), &ids)?)
}

fn budget(limit: u64) -> Budget {
    Budget::new(if limit == 0 { DEFAULT_BUDGET } else { limit })
}

unsafe fn hand_out_string(text: String, out: *mut *mut c_char) -> Result<(), Failure> {
    let c = CString::new(text).map_err(|_| Failure::Utf8)?;
    *out = c.into_raw();
    Ok(())
}

/// Parses a graph6 string into a new handle stored in `*out`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn exlab_graph_from_graph6(text: *const c_char, out: *mut *mut ExlabGraph) -> ExlabStatus {
    guarded(|| {
        if out.is_null() {
            return Err(Failure::Null("out"));
        }
        let g = parse_graph6(c_str(text, "text")?.as_bytes())?;
        *out = Box::into_raw(Box::new(ExlabGraph(g)));
        Ok(())
    })
}

/// Builds a family member (`"cycle"`, `"wheel"`, `"kneser"`, ...). `seed` is
/// used only when `has_seed` is true.
///
/// # Safety
/// `family` must be NUL-terminated, `params` must point to `len` values (or
/// be null when `len` is 0) and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn exlab_graph_generate(
    family: *const c_char,
    params: *const u64,
    len: usize,
    seed: u64,
    has_seed: bool,
    out: *mut *mut ExlabGraph,
) -> ExlabStatus {
    guarded(|| {
        if out.is_null() {
            return Err(Failure::Null("out"));
        }
        let family: Family = c_str(family, "family")?.parse()?;
        let params = if len == 0 {
            Vec::new()
        } else if params.is_null() {
            return Err(Failure::Null("params"));
        } else {
            std::slice::from_raw_parts(params, len).to_vec()
        };
        let spec = FamilySpec {
            family,
            params,
            seed: has_seed.then_some(seed),
        };
        *out = Box::into_raw(Box::new(ExlabGraph(generate(&spec)?)));
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn exlab_graph_free(g: *mut ExlabGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn exlab_graph_vertex_count(g: *const ExlabGraph) -> usize {
    g.as_ref().map_or(0, |h| h.0.n())
}

/// Writes the graph6 encoding to `*out`; free it with `exlab_string_free`.
///
/// # Safety
/// `g` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn exlab_graph_to_graph6(g: *const ExlabGraph, out: *mut *mut c_char) -> ExlabStatus {
    guarded(|| {
        if out.is_null() {
            return Err(Failure::Null("out"));
        }
        let bytes = write_graph6(graph_ref(g)?)?;
        hand_out_string(String::from_utf8_lossy(&bytes).into_owned(), out)
    })
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn exlab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `g` must be a live handle, `ids` must point to `len` vertex ids and `out`
/// must be valid.
#[no_mangle]
pub unsafe extern "C" fn exlab_is_determining(
    g: *const ExlabGraph,
    ids: *const u32,
    len: usize,
    out: *mut bool,
) -> ExlabStatus {
    guarded(|| {
        if out.is_null() {
            return Err(Failure::Null("out"));
        }
        let g = graph_ref(g)?;
        *out = is_determining(g, vertex_set(g, ids, len)?)?;
        Ok(())
    })
}

/// # Safety
/// As for `exlab_is_determining`.
#[no_mangle]
pub unsafe extern "C" fn exlab_is_resolving(
    g: *const ExlabGraph,
    ids: *const u32,
    len: usize,
    out: *mut bool,
) -> ExlabStatus {
    guarded(|| {
        if out.is_null() {
            return Err(Failure::Null("out"));
        }
        let g = graph_ref(g)?;
        *out = is_resolving(g, vertex_set(g, ids, len)?)?;
        Ok(())
    })
}

/// Smallest determining set size. A `budget` of 0 means the default.
///
/// # Safety
/// `g` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn exlab_determining_number(g: *const ExlabGraph, budget_limit: u64, out: *mut usize) -> ExlabStatus {
    guarded(|| {
        if out.is_null() {
            return Err(Failure::Null("out"));
        }
        *out = determining_number(graph_ref(g)?, &mut budget(budget_limit))?;
        Ok(())
    })
}

/// Smallest resolving set size. A `budget` of 0 means the default.
///
/// # Safety
/// `g` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn exlab_metric_dimension(g: *const ExlabGraph, budget_limit: u64, out: *mut usize) -> ExlabStatus {
    guarded(|| {
        if out.is_null() {
            return Err(Failure::Null("out"));
        }
        *out = metric_dimension(graph_ref(g)?, &mut budget(budget_limit))?;
        Ok(())
    })
}

/// The exchange report as JSON in `*out`; free it with `exlab_string_free`.
///
/// # Safety
/// `g` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn exlab_exchange_report_json(
    g: *const ExlabGraph,
    kind: ExlabKind,
    budget_limit: u64,
    out: *mut *mut c_char,
) -> ExlabStatus {
    guarded(|| {
        if out.is_null() {
            return Err(Failure::Null("out"));
        }
        let report = exchange_property(graph_ref(g)?, kind.into(), &mut budget(budget_limit))?;
        let text = serde_json::to_string(&report).map_err(|e| Error::Internal(e.to_string()))?;
        hand_out_string(text, out)
    })
}

/// Message for the last failure on this thread, or an empty string. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn exlab_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}
