#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

// Small TOML subset: top-level tables ([name], [a.b]), arrays of tables
// ([[name]]), key = value with strings, integers, floats, booleans, arrays and
// inline tables. Enough for scenario files; not a general TOML implementation.
namespace neumann1::toml {

class Value;
using Array = std::vector<Value>;
using Table = std::map<std::string, Value>;

class Value {
 public:
  Value() : v_(std::monostate{}) {}
  explicit Value(std::string s) : v_(std::move(s)) {}
  explicit Value(int64_t i) : v_(i) {}
  explicit Value(double d) : v_(d) {}
  explicit Value(bool b) : v_(b) {}
  explicit Value(Array a) : v_(std::make_shared<Array>(std::move(a))) {}
  explicit Value(Table t) : v_(std::make_shared<Table>(std::move(t))) {}

  bool is_string() const { return std::holds_alternative<std::string>(v_); }
  bool is_int() const { return std::holds_alternative<int64_t>(v_); }
  bool is_float() const { return std::holds_alternative<double>(v_); }
  bool is_bool() const { return std::holds_alternative<bool>(v_); }
  bool is_array() const {
    return std::holds_alternative<std::shared_ptr<Array>>(v_);
  }
  bool is_table() const {
    return std::holds_alternative<std::shared_ptr<Table>>(v_);
  }

  const std::string& as_string() const;
  int64_t as_int() const;
  double as_number() const;  // int or float
  bool as_bool() const;
  const Array& as_array() const;
  const Table& as_table() const;
  Table& as_table();

 private:
  std::variant<std::monostate, std::string, int64_t, double, bool,
               std::shared_ptr<Array>, std::shared_ptr<Table>>
      v_;
};

// Throws std::runtime_error with a line reference on malformed input.
Table parse(const std::string& text);
Table parse_file(const std::string& path);

// Lookup helpers; path components separated by '.'.
const Value* find(const Table& t, const std::string& path);
double get_number(const Table& t, const std::string& path, double fallback);
int64_t get_int(const Table& t, const std::string& path, int64_t fallback);
std::string get_string(const Table& t, const std::string& path,
                       const std::string& fallback);
bool get_bool(const Table& t, const std::string& path, bool fallback);

}  // namespace neumann1::toml
