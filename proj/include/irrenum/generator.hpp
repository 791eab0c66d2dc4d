#pragma once

#include <coroutine>
#include <exception>
#include <optional>
#include <utility>

namespace irrenum {

// Minimal eager-free pull generator. Values are moved out one at a time via
// next(); exceptions thrown inside the coroutine re-surface from next().
// Coroutine functions must take arguments by value (they are copied into the
// frame); never pass dangling references in.
template <typename T>
class Generator {
 public:
  struct promise_type {
    std::optional<T> value;
    std::exception_ptr exception;

    Generator get_return_object() {
      return Generator{std::coroutine_handle<promise_type>::from_promise(*this)};
    }
    std::suspend_always initial_suspend() noexcept { return {}; }
    std::suspend_always final_suspend() noexcept { return {}; }
    std::suspend_always yield_value(T v) {
      value = std::move(v);
      return {};
    }
    void return_void() {}
    void unhandled_exception() { exception = std::current_exception(); }
  };

  using Handle = std::coroutine_handle<promise_type>;

  explicit Generator(Handle h) : h_(h) {}
  Generator(Generator&& o) noexcept : h_(std::exchange(o.h_, {})) {}
  Generator& operator=(Generator&& o) noexcept {
    if (this != &o) {
      if (h_) h_.destroy();
      h_ = std::exchange(o.h_, {});
    }
    return *this;
  }
  Generator(const Generator&) = delete;
  Generator& operator=(const Generator&) = delete;
  ~Generator() {
    if (h_) h_.destroy();
  }

  std::optional<T> next() {
    if (!h_ || h_.done()) return std::nullopt;
    h_.resume();
    if (h_.promise().exception) std::rethrow_exception(h_.promise().exception);
    if (h_.done()) return std::nullopt;
    return std::move(h_.promise().value);
  }

 private:
  Handle h_;
};

}  // namespace irrenum
