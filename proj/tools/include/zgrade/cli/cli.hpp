#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zgrade/census.hpp"

namespace zgrade::cli {

enum class Format { Json, Csv, Md };

enum ExitCode : int { kOk = 0, kDisagreement = 1, kInvalidInput = 2 };

/// Which counting methods run. The closed form always runs.
struct MethodSet {
  bool minuscule = true;
  bool oracle = true;
};

/// Computes reports, optionally through a directory of cached JSON reports.
class ReportEngine {
 public:
  ReportEngine(MethodSet methods, int oracle_max_rank, std::optional<std::filesystem::path> cache_dir = {});

  [[nodiscard]] CountReport compute(const InvolutionSpec& spec) const;
  [[nodiscard]] const ReportOptions& options() const { return options_; }

 private:
  ReportOptions options_;
  std::optional<std::filesystem::path> cache_dir_;
};

/// Simple types swept by `--type all` / `verify`: A1.., B2.., C2.., D4.. up to
/// `max_rank`, then the exceptional types (all of them when
/// `all_exceptional`, else those of rank <= max_rank).
std::vector<FiniteKind> types_up_to(int max_rank, bool all_exceptional);

/// "p=2" or "q=1,5" (the whole orbit of indices).
std::string index_label(const InvolutionSpec& spec);

/// Report serialization; deterministic for identical inputs.
std::string emit(const std::vector<CountReport>& reports, Format format);
std::string report_json_text(const CountReport& report);

/// Entry point behind the executable; argv excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zgrade::cli
