#ifndef PST_PARALLEL_HPP
#define PST_PARALLEL_HPP

namespace pst {

// Upper bound on OpenMP threads used by any parallel region in the library.
// Initialized from PST_THREADS when set, otherwise the OpenMP default.
int thread_limit();
void set_thread_limit(int threads);

// Restores the previous limit on destruction.
class ThreadLimitGuard {
 public:
  explicit ThreadLimitGuard(int threads);
  ~ThreadLimitGuard();
  ThreadLimitGuard(const ThreadLimitGuard&) = delete;
  ThreadLimitGuard& operator=(const ThreadLimitGuard&) = delete;

 private:
  int previous_;
};

}  // namespace pst

#endif  // PST_PARALLEL_HPP
