//! C ABI for `eus-lab`.
//!
//! Graphs cross the boundary as opaque `EusGraph` handles owned by the
//! caller and released with `eus_graph_free`. Every fallible call returns
//! an `EusStatus`; on failure a message is available from
//! `eus_last_error_message` on the same thread. Results are written through
//! out-pointers, which are left untouched on failure.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use eus_lab::closed_forms;
use eus_lab::constructions::{self, H1Params, PendantVector};
use eus_lab::edgelist::parse_edge_list;
use eus_lab::enumeration::{extremal_scan, Direction, EnumFilter};
use eus_lab::verify::{self, Status, Verdict};
use eus_lab::{
    are_isomorphic, edge_weight, emit_graph6, index_value, parse_graph6, Error, Graph, IndexKind,
};

/// Opaque graph handle.
pub struct EusGraph(Graph);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EusStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    OutOfRange = 3,
    ParseError = 4,
    ScanCap = 5,
    EmptyClass = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EusIndexKind {
    Eus = 0,
    So = 1,
    Eso = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EusDirection {
    Min = 0,
    Max = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EusVerdictStatus {
    Confirmed = 0,
    Refuted = 1,
    Skipped = 2,
}

/// Graph-class filter. Optional numeric fields use -1 for "unset".
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct EusFilter {
    pub connected: bool,
    pub unicyclic: bool,
    pub girth: i32,
    pub pendant_count: i32,
    pub max_degree: i32,
    pub edge_count: i32,
}

/// Summary of a verification. Fields that do not apply are NaN.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct EusVerdict {
    pub status: EusVerdictStatus,
    pub bound: f64,
    pub optimum: f64,
    pub gap: f64,
    pub witness_count: u32,
    pub checked: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: EusStatus, msg: impl Into<String>) -> EusStatus {
    set_last_error(msg);
    status
}

impl From<Error> for EusStatus {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::OrderOutOfRange(_) | Error::VertexOutOfRange { .. } | Error::IsoLimit { .. } => {
                EusStatus::OutOfRange
            }
            Error::Graph6(_) | Error::EdgeList { .. } => EusStatus::ParseError,
            Error::ScanCap { .. } => EusStatus::ScanCap,
            Error::EmptyClass(_) => EusStatus::EmptyClass,
            _ => EusStatus::InvalidArgument,
        };
        fail(status, e.to_string())
    }
}

impl From<EusIndexKind> for IndexKind {
    fn from(k: EusIndexKind) -> Self {
        match k {
            EusIndexKind::Eus => IndexKind::Eus,
            EusIndexKind::So => IndexKind::So,
            EusIndexKind::Eso => IndexKind::Eso,
        }
    }
}

/// Runs `body`, converting errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), EusStatus>) -> EusStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => EusStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(EusStatus::Panic, "internal panic"),
    }
}

unsafe fn graph_ref<'a>(g: *const EusGraph) -> Result<&'a Graph, EusStatus> {
    g.as_ref()
        .map(|h| &h.0)
        .ok_or_else(|| fail(EusStatus::NullPointer, "null graph handle"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), EusStatus> {
    if out.is_null() {
        return Err(fail(EusStatus::NullPointer, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_graph(out: *mut *mut EusGraph, g: Result<Graph, Error>) -> Result<(), EusStatus> {
    if out.is_null() {
        return Err(fail(EusStatus::NullPointer, "null output pointer"));
    }
    let g = g?;
    out.write(Box::into_raw(Box::new(EusGraph(g))));
    Ok(())
}

unsafe fn c_str<'a>(s: *const c_char) -> Result<&'a str, EusStatus> {
    if s.is_null() {
        return Err(fail(EusStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(EusStatus::ParseError, "string is not UTF-8"))
}

/// Copies the last error message of this thread into `buf` (NUL
/// terminated, truncated to `cap`). Returns the full message length, or 0
/// if there is none.
#[no_mangle]
pub unsafe extern "C" fn eus_last_error_message(buf: *mut c_char, cap: usize) -> usize {
    LAST_ERROR.with(|e| {
        let e = e.borrow();
        let Some(msg) = e.as_ref() else { return 0 };
        let bytes = msg.as_bytes();
        if !buf.is_null() && cap > 0 {
            let n = bytes.len().min(cap - 1);
            ptr::copy_nonoverlapping(bytes.as_ptr().cast::<c_char>(), buf, n);
            *buf.add(n) = 0;
        }
        bytes.len()
    })
}

/// Edgeless graph on `n` vertices, `1 <= n <= 64`.
#[no_mangle]
pub unsafe extern "C" fn eus_graph_new(n: u32, out: *mut *mut EusGraph) -> EusStatus {
    guard(|| write_graph(out, Graph::empty(n as usize)))
}

/// Graph from `edge_count` vertex pairs stored flat in `pairs`.
#[no_mangle]
pub unsafe extern "C" fn eus_graph_from_edges(
    n: u32,
    pairs: *const u32,
    edge_count: usize,
    out: *mut *mut EusGraph,
) -> EusStatus {
    guard(|| {
        if pairs.is_null() && edge_count > 0 {
            return Err(fail(EusStatus::NullPointer, "null edge array"));
        }
        let flat = if edge_count == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(pairs, 2 * edge_count)
        };
        let edges: Vec<(usize, usize)> = flat
            .chunks_exact(2)
            .map(|p| (p[0] as usize, p[1] as usize))
            .collect();
        write_graph(out, Graph::from_edges(n as usize, &edges))
    })
}

#[no_mangle]
pub unsafe extern "C" fn eus_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut EusGraph,
) -> EusStatus {
    guard(|| write_graph(out, parse_graph6(c_str(text)?)))
}

/// Parses the `n=<N>` / `i j` edge-list text format.
#[no_mangle]
pub unsafe extern "C" fn eus_graph_from_edge_list(
    text: *const c_char,
    out: *mut *mut EusGraph,
) -> EusStatus {
    guard(|| write_graph(out, parse_edge_list(c_str(text)?)))
}

/// New graph equal to `g` plus the edge `i j`; `g` is unchanged.
#[no_mangle]
pub unsafe extern "C" fn eus_graph_add_edge(
    g: *const EusGraph,
    i: u32,
    j: u32,
    out: *mut *mut EusGraph,
) -> EusStatus {
    guard(|| write_graph(out, graph_ref(g)?.add_edge(i as usize, j as usize)))
}

#[no_mangle]
pub unsafe extern "C" fn eus_graph_free(g: *mut EusGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn eus_graph_order(g: *const EusGraph) -> u32 {
    g.as_ref().map_or(0, |h| h.0.order() as u32)
}

/// Number of edges, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn eus_graph_size(g: *const EusGraph) -> u32 {
    g.as_ref().map_or(0, |h| h.0.size() as u32)
}

#[no_mangle]
pub unsafe extern "C" fn eus_graph_degree(g: *const EusGraph, i: u32, out: *mut u32) -> EusStatus {
    guard(|| write_out(out, graph_ref(g)?.degree(i as usize)? as u32))
}

/// Girth, with 0 meaning the graph is acyclic.
#[no_mangle]
pub unsafe extern "C" fn eus_graph_girth(g: *const EusGraph, out: *mut u32) -> EusStatus {
    guard(|| write_out(out, graph_ref(g)?.girth().finite().unwrap_or(0) as u32))
}

#[no_mangle]
pub unsafe extern "C" fn eus_graph_is_connected(g: *const EusGraph, out: *mut bool) -> EusStatus {
    guard(|| write_out(out, graph_ref(g)?.is_connected()))
}

#[no_mangle]
pub unsafe extern "C" fn eus_graph_is_unicyclic(g: *const EusGraph, out: *mut bool) -> EusStatus {
    guard(|| write_out(out, graph_ref(g)?.is_unicyclic()))
}

#[no_mangle]
pub unsafe extern "C" fn eus_graph_pendant_count(g: *const EusGraph, out: *mut u32) -> EusStatus {
    guard(|| write_out(out, graph_ref(g)?.pendant_count() as u32))
}

/// Writes the graph6 string and a terminating NUL into `buf`. `out_len`
/// receives the string length (without NUL) even when `buf` is too small.
#[no_mangle]
pub unsafe extern "C" fn eus_graph_to_graph6(
    g: *const EusGraph,
    buf: *mut c_char,
    cap: usize,
    out_len: *mut usize,
) -> EusStatus {
    guard(|| {
        let s = emit_graph6(graph_ref(g)?);
        write_out(out_len, s.len())?;
        if buf.is_null() || cap < s.len() + 1 {
            return Err(fail(
                EusStatus::BufferTooSmall,
                format!("graph6 needs {} bytes", s.len() + 1),
            ));
        }
        ptr::copy_nonoverlapping(s.as_ptr().cast::<c_char>(), buf, s.len());
        *buf.add(s.len()) = 0;
        Ok(())
    })
}

/// Isomorphism test for orders up to 12.
#[no_mangle]
pub unsafe extern "C" fn eus_are_isomorphic(
    g: *const EusGraph,
    h: *const EusGraph,
    out: *mut bool,
) -> EusStatus {
    guard(|| write_out(out, are_isomorphic(graph_ref(g)?, graph_ref(h)?)?))
}

#[no_mangle]
pub unsafe extern "C" fn eus_edge_weight(
    kind: EusIndexKind,
    di: u32,
    dj: u32,
    out: *mut f64,
) -> EusStatus {
    guard(|| write_out(out, edge_weight(kind.into(), di as usize, dj as usize)?))
}

#[no_mangle]
pub unsafe extern "C" fn eus_index_value(
    g: *const EusGraph,
    kind: EusIndexKind,
    out: *mut f64,
) -> EusStatus {
    guard(|| write_out(out, index_value(graph_ref(g)?, kind.into())))
}

#[no_mangle]
pub unsafe extern "C" fn eus_cycle(n: u32, out: *mut *mut EusGraph) -> EusStatus {
    guard(|| write_graph(out, constructions::cycle(n as usize)))
}

#[no_mangle]
pub unsafe extern "C" fn eus_path(n: u32, out: *mut *mut EusGraph) -> EusStatus {
    guard(|| write_graph(out, constructions::path(n as usize)))
}

#[no_mangle]
pub unsafe extern "C" fn eus_star(n: u32, out: *mut *mut EusGraph) -> EusStatus {
    guard(|| write_graph(out, constructions::star(n as usize)))
}

#[no_mangle]
pub unsafe extern "C" fn eus_complete(n: u32, out: *mut *mut EusGraph) -> EusStatus {
    guard(|| write_graph(out, constructions::complete(n as usize)))
}

#[no_mangle]
pub unsafe extern "C" fn eus_tadpole(n: u32, g: u32, out: *mut *mut EusGraph) -> EusStatus {
    guard(|| write_graph(out, constructions::tadpole(n as usize, g as usize)))
}

#[no_mangle]
pub unsafe extern "C" fn eus_h1(
    n: u32,
    g: u32,
    k: u32,
    l: u32,
    out: *mut *mut EusGraph,
) -> EusStatus {
    guard(|| {
        let params = H1Params::new(n as usize, g as usize, k as usize, l as usize);
        write_graph(out, params.and_then(constructions::h1))
    })
}

#[no_mangle]
pub unsafe extern "C" fn eus_pineapple(n: u32, p: u32, out: *mut *mut EusGraph) -> EusStatus {
    guard(|| write_graph(out, constructions::pineapple(n as usize, p as usize)))
}

/// Complete graph on `len` vertices with `counts[i]` pendants on vertex `i`.
#[no_mangle]
pub unsafe extern "C" fn eus_clique_with_pendants(
    counts: *const u32,
    len: usize,
    out: *mut *mut EusGraph,
) -> EusStatus {
    guard(|| {
        if counts.is_null() {
            return Err(fail(EusStatus::NullPointer, "null counts array"));
        }
        let counts = std::slice::from_raw_parts(counts, len)
            .iter()
            .map(|&c| c as usize)
            .collect();
        write_graph(
            out,
            PendantVector::new(counts).and_then(|a| constructions::clique_with_pendants(&a)),
        )
    })
}

#[no_mangle]
pub unsafe extern "C" fn eus_formula_h1(
    n: u32,
    g: u32,
    k: u32,
    l: u32,
    out: *mut f64,
) -> EusStatus {
    guard(|| {
        write_out(
            out,
            closed_forms::eus_h1(n as usize, g as usize, k as usize, l as usize)?,
        )
    })
}

#[no_mangle]
pub unsafe extern "C" fn eus_formula_unicyclic_min_bound(
    n: u32,
    g: u32,
    out: *mut f64,
) -> EusStatus {
    guard(|| {
        write_out(
            out,
            closed_forms::unicyclic_min_bound(n as usize, g as usize)?,
        )
    })
}

#[no_mangle]
pub unsafe extern "C" fn eus_formula_knp_max_bound(n: u32, p: u32, out: *mut f64) -> EusStatus {
    guard(|| write_out(out, closed_forms::knp_max_bound(n as usize, p as usize)?))
}

fn optional(v: i32) -> Option<usize> {
    (v >= 0).then_some(v as usize)
}

/// Extremal scan over labelled graphs on `n` vertices. Writes the optimum
/// and the number of optimizers up to isomorphism. `workers = 0` uses the
/// default pool size.
#[no_mangle]
pub unsafe extern "C" fn eus_extremal_scan(
    n: u32,
    filter: *const EusFilter,
    kind: EusIndexKind,
    direction: EusDirection,
    workers: u32,
    out_optimum: *mut f64,
    out_witness_count: *mut u32,
) -> EusStatus {
    guard(|| {
        let f = filter
            .as_ref()
            .ok_or_else(|| fail(EusStatus::NullPointer, "null filter"))?;
        if out_optimum.is_null() || out_witness_count.is_null() {
            return Err(fail(EusStatus::NullPointer, "null output pointer"));
        }
        let filter = EnumFilter {
            connected: f.connected,
            unicyclic: f.unicyclic,
            girth: optional(f.girth),
            pendant_count: optional(f.pendant_count),
            max_degree: optional(f.max_degree),
            edge_count: optional(f.edge_count),
        };
        let dir = match direction {
            EusDirection::Min => Direction::Min,
            EusDirection::Max => Direction::Max,
        };
        let report = extremal_scan(n as usize, &filter, kind.into(), dir, workers as usize)?;
        write_out(out_optimum, report.optimum)?;
        write_out(out_witness_count, report.witnesses.len() as u32)
    })
}

fn summarize(v: &Verdict) -> EusVerdict {
    EusVerdict {
        status: match v.status {
            Status::Confirmed => EusVerdictStatus::Confirmed,
            Status::Refuted { .. } => EusVerdictStatus::Refuted,
            Status::Skipped { .. } => EusVerdictStatus::Skipped,
        },
        bound: v.bound.unwrap_or(f64::NAN),
        optimum: v.optimum.unwrap_or(f64::NAN),
        gap: v.gap.unwrap_or(f64::NAN),
        witness_count: v.witnesses.len() as u32,
        checked: v.checked,
    }
}

#[no_mangle]
pub unsafe extern "C" fn eus_verify_unicyclic_min(
    n: u32,
    g: u32,
    workers: u32,
    out: *mut EusVerdict,
) -> EusStatus {
    guard(|| {
        write_out(
            out,
            summarize(&verify::verify_unicyclic_min(
                n as usize,
                g as usize,
                workers as usize,
            )?),
        )
    })
}

#[no_mangle]
pub unsafe extern "C" fn eus_verify_connected_min(
    n: u32,
    g: u32,
    workers: u32,
    out: *mut EusVerdict,
) -> EusStatus {
    guard(|| {
        write_out(
            out,
            summarize(&verify::verify_connected_min(
                n as usize,
                g as usize,
                workers as usize,
            )?),
        )
    })
}

#[no_mangle]
pub unsafe extern "C" fn eus_verify_knp_max(
    n: u32,
    p: u32,
    workers: u32,
    out: *mut EusVerdict,
) -> EusStatus {
    guard(|| {
        write_out(
            out,
            summarize(&verify::verify_knp_max(
                n as usize,
                p as usize,
                workers as usize,
            )?),
        )
    })
}

#[no_mangle]
pub unsafe extern "C" fn eus_verify_h1_corollary(
    n: u32,
    g: u32,
    out: *mut EusVerdict,
) -> EusStatus {
    guard(|| {
        write_out(
            out,
            summarize(&verify::verify_h1_corollary(n as usize, g as usize)?),
        )
    })
}
