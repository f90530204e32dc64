//! C ABI over the serial-module combinatorics library.
//!
//! All entry points follow the same conventions: handles are opaque
//! pointers created and destroyed by this library, every fallible call
//! returns a [`TaunakStatus`], and results travel through out-parameters.
//! String results are written into caller-provided buffers; when the
//! buffer is too small the call reports the required size and fails with
//! `BUFFER_TOO_SMALL` without writing.

use libc::{c_char, size_t};
use std::collections::BTreeSet;
use taunak::cluster::ClusterCategory;
use taunak::lattice::TorsLattice;
use taunak::picture;
use taunak::smc::{SemibrickPair, SmcOps};
use taunak::tautilt::WideSub;
use taunak::{AlgebraSpec, Indec};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TaunakStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidSpec = 2,
    InvalidModule = 3,
    BufferTooSmall = 4,
    VerificationFailed = 5,
}

/// Opaque handle: an algebra given by its Kupisch series.
pub struct TaunakAlgebra {
    spec: AlgebraSpec,
}

fn spec_of<'a>(handle: *const TaunakAlgebra) -> Option<&'a AlgebraSpec> {
    unsafe { handle.as_ref() }.map(|h| &h.spec)
}

/// Create an algebra from a Kupisch series of length `n`.
/// On success writes a fresh handle into `out`.
#[no_mangle]
pub extern "C" fn taunak_algebra_new(
    n: size_t,
    kupisch: *const size_t,
    out: *mut *mut TaunakAlgebra,
) -> TaunakStatus {
    if kupisch.is_null() || out.is_null() {
        return TaunakStatus::NullPointer;
    }
    let series = unsafe { std::slice::from_raw_parts(kupisch, n) }.to_vec();
    match AlgebraSpec::new(n, series) {
        Ok(spec) => {
            let handle = Box::new(TaunakAlgebra { spec });
            unsafe { *out = Box::into_raw(handle) };
            TaunakStatus::Ok
        }
        Err(_) => TaunakStatus::InvalidSpec,
    }
}

/// Destroy a handle created by [`taunak_algebra_new`]. Null is a no-op.
#[no_mangle]
pub extern "C" fn taunak_algebra_free(handle: *mut TaunakAlgebra) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle) });
    }
}

/// Number of simple modules, or 0 on a null handle.
#[no_mangle]
pub extern "C" fn taunak_algebra_rank(handle: *const TaunakAlgebra) -> size_t {
    spec_of(handle).map_or(0, |s| s.n())
}

/// Whether the algebra is cyclic (the last projective is not simple).
#[no_mangle]
pub extern "C" fn taunak_algebra_is_cyclic(handle: *const TaunakAlgebra) -> bool {
    spec_of(handle).is_some_and(|s| s.is_cyclic())
}

/// Number of indecomposable modules.
#[no_mangle]
pub extern "C" fn taunak_indec_count(handle: *const TaunakAlgebra) -> size_t {
    spec_of(handle).map_or(0, |s| s.indecs().len())
}

/// Number of bricks.
#[no_mangle]
pub extern "C" fn taunak_brick_count(handle: *const TaunakAlgebra) -> size_t {
    spec_of(handle).map_or(0, |s| s.bricks().len())
}

fn checked_module(spec: &AlgebraSpec, top: size_t, len: size_t) -> Option<Indec> {
    let m = Indec::new(top, len);
    spec.is_indec(m).then_some(m)
}

/// Dimension of the Hom space between two serial modules.
#[no_mangle]
pub extern "C" fn taunak_hom_dim(
    handle: *const TaunakAlgebra,
    from_top: size_t,
    from_len: size_t,
    to_top: size_t,
    to_len: size_t,
    out: *mut size_t,
) -> TaunakStatus {
    let Some(spec) = spec_of(handle) else {
        return TaunakStatus::NullPointer;
    };
    if out.is_null() {
        return TaunakStatus::NullPointer;
    }
    let (Some(x), Some(y)) = (
        checked_module(spec, from_top, from_len),
        checked_module(spec, to_top, to_len),
    ) else {
        return TaunakStatus::InvalidModule;
    };
    unsafe { *out = spec.hom_dim(x, y) };
    TaunakStatus::Ok
}

/// Dimension of the Ext space between two serial modules.
#[no_mangle]
pub extern "C" fn taunak_ext_dim(
    handle: *const TaunakAlgebra,
    from_top: size_t,
    from_len: size_t,
    to_top: size_t,
    to_len: size_t,
    out: *mut size_t,
) -> TaunakStatus {
    let Some(spec) = spec_of(handle) else {
        return TaunakStatus::NullPointer;
    };
    if out.is_null() {
        return TaunakStatus::NullPointer;
    }
    let (Some(x), Some(y)) = (
        checked_module(spec, from_top, from_len),
        checked_module(spec, to_top, to_len),
    ) else {
        return TaunakStatus::InvalidModule;
    };
    unsafe { *out = spec.ext_dim(x, y) };
    TaunakStatus::Ok
}

/// Number of two-term simple-minded collections.
#[no_mangle]
pub extern "C" fn taunak_collection_count(
    handle: *const TaunakAlgebra,
    out: *mut size_t,
) -> TaunakStatus {
    let Some(spec) = spec_of(handle) else {
        return TaunakStatus::NullPointer;
    };
    if out.is_null() {
        return TaunakStatus::NullPointer;
    }
    unsafe { *out = spec.all_two_smcs().len() };
    TaunakStatus::Ok
}

/// Whether the classifying cube complex satisfies the flag condition at
/// every vertex link.
#[no_mangle]
pub extern "C" fn taunak_complex_is_nonpositively_curved(
    handle: *const TaunakAlgebra,
    out: *mut bool,
) -> TaunakStatus {
    let Some(spec) = spec_of(handle) else {
        return TaunakStatus::NullPointer;
    };
    if out.is_null() {
        return TaunakStatus::NullPointer;
    }
    let cat = ClusterCategory::build(spec);
    unsafe { *out = cat.build_cube_complex().check_links_flag().flag };
    TaunakStatus::Ok
}

/// Run the whole cross-pipeline verification suite; `Ok` means every
/// certificate holds.
#[no_mangle]
pub extern "C" fn taunak_verify(handle: *const TaunakAlgebra) -> TaunakStatus {
    let Some(spec) = spec_of(handle) else {
        return TaunakStatus::NullPointer;
    };
    let lat = TorsLattice::build(WideSub::full(spec));
    let census: BTreeSet<SemibrickPair> = spec.all_two_smcs().into_iter().collect();
    let from_lat: BTreeSet<SemibrickPair> = (0..lat.len()).map(|v| lat.x_of(v)).collect();
    if census != from_lat {
        return TaunakStatus::VerificationFailed;
    }
    if !picture::verify_presentation(spec).passed() {
        return TaunakStatus::VerificationFailed;
    }
    let cat = ClusterCategory::build(spec);
    if !cat.check_cubical().passed()
        || !cat.check_sphere_links().passed()
        || !cat.check_pi1_cells().passed()
        || !cat.build_cube_complex().check_links_flag().flag
    {
        return TaunakStatus::VerificationFailed;
    }
    TaunakStatus::Ok
}

fn write_string(text: &str, buf: *mut c_char, cap: size_t, written: *mut size_t) -> TaunakStatus {
    if written.is_null() {
        return TaunakStatus::NullPointer;
    }
    let needed = text.len() + 1;
    unsafe { *written = needed };
    if buf.is_null() || cap < needed {
        return TaunakStatus::BufferTooSmall;
    }
    unsafe {
        std::ptr::copy_nonoverlapping(text.as_ptr(), buf as *mut u8, text.len());
        *buf.add(text.len()) = 0;
    }
    TaunakStatus::Ok
}

/// JSON summary of the algebra. Writes at most `cap` bytes including the
/// terminator; `written` always receives the required size.
#[no_mangle]
pub extern "C" fn taunak_info_json(
    handle: *const TaunakAlgebra,
    buf: *mut c_char,
    cap: size_t,
    written: *mut size_t,
) -> TaunakStatus {
    let Some(spec) = spec_of(handle) else {
        return TaunakStatus::NullPointer;
    };
    write_string(&taunak::export::info_json(spec).to_string(), buf, cap, written)
}
