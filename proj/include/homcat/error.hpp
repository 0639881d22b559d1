#pragma once

#include <stdexcept>
#include <string>

namespace homcat {

// All library failures carry a stable machine-readable code alongside the
// human-readable message, so callers (and the CLI) can branch on them.
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

  private:
    std::string code_;
};

inline Error err_index_out_of_range(const std::string& msg) { return {"index-out-of-range", msg}; }
inline Error err_mismatch(const std::string& msg) { return {"source-target-mismatch", msg}; }
inline Error err_resource_limit(const std::string& msg) { return {"resource-limit-exceeded", msg}; }
inline Error err_product_not_found(const std::string& msg) { return {"product-not-found", msg}; }
inline Error err_colimit_not_found(const std::string& msg) { return {"colimit-not-found", msg}; }

}  // namespace homcat
