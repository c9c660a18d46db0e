#ifndef LIECOH_THREADS_HPP
#define LIECOH_THREADS_HPP

namespace liecoh {

/// Resolves the worker count for parallel kernels. Order of precedence:
/// an explicit positive request, the LIECOH_THREADS environment variable,
/// then the OpenMP default. LIECOH_THREADS=0 (or unset) means auto.
int resolve_threads(int requested = 0);

/// Process-wide override, used by the CLI. 0 restores auto.
void set_thread_override(int n);

}  // namespace liecoh

#endif
