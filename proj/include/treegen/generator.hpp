#pragma once

#include <coroutine>
#include <exception>
#include <iterator>
#include <utility>

namespace treegen {

// Single-consumer pull stream backed by a C++20 coroutine. Values are
// yielded by const reference; the referenced object is only valid until
// the next call to next(), so consumers that retain a value must copy it.
template <class T>
class Generator {
 public:
  struct promise_type {
    const T* current = nullptr;
    std::exception_ptr error;

    Generator get_return_object() {
      return Generator{std::coroutine_handle<promise_type>::from_promise(*this)};
    }
    std::suspend_always initial_suspend() noexcept { return {}; }
    std::suspend_always final_suspend() noexcept { return {}; }
    std::suspend_always yield_value(const T& value) noexcept {
      current = &value;
      return {};
    }
    void return_void() noexcept {}
    void unhandled_exception() { error = std::current_exception(); }
  };

  Generator() = default;
  Generator(Generator&& other) noexcept : handle_(std::exchange(other.handle_, {})) {}
  Generator& operator=(Generator&& other) noexcept {
    if (this != &other) {
      destroy();
      handle_ = std::exchange(other.handle_, {});
    }
    return *this;
  }
  Generator(const Generator&) = delete;
  Generator& operator=(const Generator&) = delete;
  ~Generator() { destroy(); }

  // Advances to the next value; returns false when the stream is exhausted.
  bool next() {
    if (!handle_ || handle_.done()) return false;
    handle_.resume();
    if (handle_.done()) {
      if (handle_.promise().error) std::rethrow_exception(handle_.promise().error);
      return false;
    }
    return true;
  }

  const T& value() const { return *handle_.promise().current; }

  struct iterator {
    using iterator_category = std::input_iterator_tag;
    using value_type = T;
    using difference_type = std::ptrdiff_t;

    Generator* gen = nullptr;

    bool operator==(std::default_sentinel_t) const { return gen == nullptr; }
    iterator& operator++() {
      if (!gen->next()) gen = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    const T& operator*() const { return gen->value(); }
  };

  iterator begin() {
    iterator it{this};
    ++it;
    return it;
  }
  std::default_sentinel_t end() const { return {}; }

 private:
  explicit Generator(std::coroutine_handle<promise_type> h) : handle_(h) {}
  void destroy() {
    if (handle_) handle_.destroy();
    handle_ = {};
  }

  std::coroutine_handle<promise_type> handle_;
};

}  // namespace treegen
