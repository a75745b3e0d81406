#pragma once

#include <string>
#include <string_view>
#include <vector>

// Minimal streaming JSON writer with insertion-ordered keys and a fixed
// floating-point format (17 significant digits) so emitted documents are
// byte-stable across runs.

namespace scherk {

std::string format_double(double v);

class JsonWriter {
  public:
    void begin_object();
    void end_object();
    void begin_array();
    void end_array();
    void key(std::string_view k);
    void value(double v);
    void value(long long v);
    void value(int v) { value(static_cast<long long>(v)); }
    void value(size_t v) { value(static_cast<long long>(v)); }
    void value(bool v);
    void value(std::string_view v);
    void value(const char* v) { value(std::string_view(v)); }
    void null_value();

    void kv(std::string_view k, double v) { key(k); value(v); }
    void kv(std::string_view k, long long v) { key(k); value(v); }
    void kv(std::string_view k, int v) { key(k); value(v); }
    void kv(std::string_view k, bool v) { key(k); value(v); }
    void kv(std::string_view k, std::string_view v) { key(k); value(v); }
    void kv(std::string_view k, const char* v) { key(k); value(std::string_view(v)); }

    const std::string& str() const { return out_; }
    std::string take() { return std::move(out_); }

  private:
    std::string out_;
    std::vector<bool> first_stack_{true};
    bool pending_key_ = false;

    void pre_value();
    void value_string_raw(std::string_view v);
};

}  // namespace scherk
