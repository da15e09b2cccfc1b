//! C ABI over the permcheck engine.
//!
//! Groups live behind an opaque `PcGroup` handle. Every fallible call
//! returns a `PcStatus`; on failure `pc_last_error_message` describes the
//! error until the next call on the same thread. Strings returned through
//! out-parameters are owned by the caller and released with `pc_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use permcheck::catalog::{parse_group_file, BuiltGroup};
use permcheck::permutability::{perm4, permutes, product_set};
use permcheck::report::to_json;
use permcheck::structure::subgroup_from_generators;
use permcheck::{classify, Error, GroupContext, GroupSpec, Limits};

/// Opaque group handle.
pub struct PcGroup {
    built: BuiltGroup,
    ctx: GroupContext,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PcStatus {
    Ok = 0,
    InputError = 1,
    CapExceeded = 2,
    NullPointer = 3,
    Internal = 4,
}

/// Verdict for a pair of subgroups `H`, `K`.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PcCheckVerdict {
    pub perm4: bool,
    pub permutes: bool,
    pub h_order: usize,
    pub k_order: usize,
    pub join_order: usize,
    /// `|HKHK|`.
    pub product_order: usize,
    /// `|HK|`.
    pub hk_order: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> PcStatus {
    if e.is_cap() {
        PcStatus::CapExceeded
    } else {
        PcStatus::InputError
    }
}

/// Runs `f`, translating errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (PcStatus, String)>) -> PcStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PcStatus::Ok,
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(panic) => {
            let message = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {message}"));
            PcStatus::Internal
        }
    }
}

fn engine(e: Error) -> (PcStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (PcStatus, String) {
    (PcStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (PcStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (PcStatus::InputError, format!("{what} is not valid UTF-8")))
}

fn limits(max_order: usize, lattice_cap: usize) -> Limits {
    let mut l = Limits::default();
    if max_order > 0 {
        l.max_order = max_order;
    }
    if lattice_cap > 0 {
        l.lattice_cap = lattice_cap;
    }
    l
}

fn into_handle(
    built: BuiltGroup,
    limits: Limits,
    out: *mut *mut PcGroup,
) -> Result<(), (PcStatus, String)> {
    let ctx = GroupContext::new(built.table.clone(), limits).map_err(engine)?;
    unsafe { *out = Box::into_raw(Box::new(PcGroup { built, ctx })) };
    Ok(())
}

fn write_string(s: String, out: *mut *mut c_char) -> Result<(), (PcStatus, String)> {
    let c = CString::new(s)
        .map_err(|_| (PcStatus::Internal, "output contains a nul byte".to_string()))?;
    unsafe { *out = c.into_raw() };
    Ok(())
}

/// Builds a builtin group by name (`S3`, `D12`, `C2xC2`, `file:path`, ...).
/// Zero for `max_order` or `lattice_cap` selects the default.
///
/// # Safety
/// `name` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_group_from_name(
    name: *const c_char,
    max_order: usize,
    lattice_cap: usize,
    out: *mut *mut PcGroup,
) -> PcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let name = read_str(name, "name")?;
        let limits = limits(max_order, lattice_cap);
        let built = GroupSpec::parse(name)
            .and_then(|s| s.build(&limits))
            .map_err(engine)?;
        into_handle(built, limits, out)
    })
}

/// Builds a group from the text of a group file (`degree d` then `gen`
/// lines). Generators are named `g1`, `g2`, ... for `pc_check`.
///
/// # Safety
/// `text` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_group_from_file_text(
    text: *const c_char,
    max_order: usize,
    lattice_cap: usize,
    out: *mut *mut PcGroup,
) -> PcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let text = read_str(text, "text")?;
        let limits = limits(max_order, lattice_cap);
        let gens = parse_group_file(text).map_err(engine)?;
        let built = BuiltGroup::from_generators("file", &gens, &limits).map_err(engine)?;
        into_handle(built, limits, out)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `group` must come from a `pc_group_from_*` call and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn pc_group_free(group: *mut PcGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// Group order, or 0 for a null handle.
///
/// # Safety
/// `group` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pc_group_order(group: *const PcGroup) -> usize {
    group.as_ref().map_or(0, |g| g.ctx.table().order())
}

/// Number of subgroups, or 0 for a null handle.
///
/// # Safety
/// `group` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pc_group_num_subgroups(group: *const PcGroup) -> usize {
    group.as_ref().map_or(0, |g| g.ctx.lattice().len())
}

/// Classification report as JSON.
///
/// # Safety
/// `group` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_classify_json(
    group: *const PcGroup,
    out: *mut *mut c_char,
) -> PcStatus {
    guard(|| {
        let g = group.as_ref().ok_or_else(|| null("group"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let report = classify(&g.built.name, &g.ctx, false).map_err(engine)?;
        write_string(to_json(&report), out)
    })
}

/// Subgroup lattice as JSON.
///
/// # Safety
/// `group` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_lattice_json(group: *const PcGroup, out: *mut *mut c_char) -> PcStatus {
    guard(|| {
        let g = group.as_ref().ok_or_else(|| null("group"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        write_string(to_json(&g.ctx.lattice().entries()), out)
    })
}

/// Compares the subgroups generated by `h` and `k`, each a `;`-separated
/// list of elements in cycle notation or words over named generators.
///
/// # Safety
/// `group` must be a live handle, `h` and `k` valid C strings and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_check(
    group: *const PcGroup,
    h: *const c_char,
    k: *const c_char,
    out: *mut PcCheckVerdict,
) -> PcStatus {
    guard(|| {
        let g = group.as_ref().ok_or_else(|| null("group"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let table = g.ctx.table();
        let sub = |text| -> Result<_, (PcStatus, String)> {
            let elems = g.built.parse_elements(text).map_err(engine)?;
            Ok(subgroup_from_generators(table, &elems))
        };
        let hs = sub(read_str(h, "h")?)?;
        let ks = sub(read_str(k, "k")?)?;
        let v = perm4(table, &hs, &ks);
        let hk = product_set(table, &hs.as_elements(), &ks.as_elements()).map_err(engine)?;
        *out = PcCheckVerdict {
            perm4: v.holds,
            permutes: permutes(table, &hs, &ks),
            h_order: hs.order(),
            k_order: ks.order(),
            join_order: v.join.order(),
            product_order: v.product.len(),
            hk_order: hk.len(),
        };
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn pc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn pc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
