// Command-line front end for CBBA validation, evidential distances and the
// Example 1 parameter sweeps.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edm/document.hpp"
#include "edm/example.hpp"
#include "edm/oracle.hpp"

namespace {

enum Exit : int { kOk = 0, kInvalid = 2, kParseFailure = 3, kUsage = 4 };

// Thrown to unwind with a specific exit code after the message was printed.
struct ExitWith {
  int code;
};

int exit_code_for(const edm::ValidationReport& report) {
  return report.has(edm::ErrorCode::ParseError) ? kParseFailure : kInvalid;
}

edm::Cbba load(const std::string& path) {
  auto result = edm::parse_cbba_file(path);
  if (auto* report = std::get_if<edm::ValidationReport>(&result)) {
    std::cerr << path << ":\n" << report->to_lines();
    throw ExitWith{exit_code_for(*report)};
  }
  return std::get<edm::Cbba>(std::move(result));
}

edm::DistanceForm form_from(const std::string& name) {
  if (const auto form = edm::parse_distance_form(name)) return *form;
  std::cerr << "unknown form '" << name << "' (expected sesquilinear, bilinear or scalar)\n";
  throw ExitWith{kUsage};
}

// Writes through `write` to the named file, or to stdout for "-".
template <typename Writer>
void emit(const std::string& out_path, Writer&& write) {
  if (out_path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    throw ExitWith{kUsage};
  }
  write(out);
}

int run_validate(const std::string& path) {
  auto result = edm::parse_cbba_file(path);
  if (auto* report = std::get_if<edm::ValidationReport>(&result)) {
    std::cout << report->to_lines();
    return exit_code_for(*report);
  }
  const auto& m = std::get<edm::Cbba>(result);
  std::cout << "valid\t" << m.focal_elements().size() << " focal elements\t"
            << (edm::is_real(m) ? "real" : "complex") << "\n";
  return kOk;
}

int run_distance(const std::string& a, const std::string& b, const std::string& form, bool oracle) {
  const auto m1 = load(a);
  const auto m2 = load(b);
  const auto selected = form_from(form);
  const double d = oracle ? edm::brute_force_distance(m1, m2, selected) : edm::edm_distance(m1, m2, selected);
  std::cout << edm::format_number(d) << "\n";
  return kOk;
}

int run_matrix(const std::vector<std::string>& files, const std::string& form, const std::string& out_path) {
  std::vector<edm::Cbba> bodies;
  for (const auto& f : files) bodies.push_back(load(f));
  const auto matrix = edm::distance_matrix(bodies, form_from(form));
  emit(out_path, [&](std::ostream& out) {
    for (std::size_t i = 0; i < files.size(); ++i) {
      out << (i ? "," : "") << std::filesystem::path(files[i]).stem().string();
    }
    out << "\n";
    for (std::size_t i = 0; i < matrix.size(); ++i) {
      for (std::size_t j = 0; j < matrix.size(); ++j) out << (j ? "," : "") << edm::format_number(matrix(i, j));
      out << "\n";
    }
  });
  return kOk;
}

int run_sweep(const std::string& name, edm::SweepSpec spec, const std::vector<std::string>& forms,
              const std::string& out_path) {
  if (name != "example1") {
    std::cerr << "unknown sweep '" << name << "' (available: example1)\n";
    return kUsage;
  }
  for (const auto& f : forms) spec.forms.push_back(form_from(f));
  const auto table = edm::run_sweep(spec);
  emit(out_path, [&](std::ostream& out) { edm::write_csv(table, out); });
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complex basic belief assignments and the EDM evidential distance"};
  app.require_subcommand(1);

  std::string file;
  auto* validate = app.add_subcommand("validate", "Validate a CBBA document");
  validate->add_option("file", file, "CBBA JSON document")->required();

  std::string file1;
  std::string file2;
  std::string form = "sesquilinear";
  auto* distance = app.add_subcommand("distance", "EDM distance between two CBBAs");
  distance->add_option("file1", file1)->required();
  distance->add_option("file2", file2)->required();
  distance->add_option("--form", form, "sesquilinear|bilinear|scalar");

  auto* oracle = app.add_subcommand("oracle", "Brute-force full power-set evaluation of the distance");
  oracle->add_option("file1", file1)->required();
  oracle->add_option("file2", file2)->required();
  oracle->add_option("--form", form, "sesquilinear|bilinear|scalar");

  std::vector<std::string> files;
  std::string out_path;
  auto* matrix = app.add_subcommand("matrix", "Pairwise distance matrix as CSV");
  matrix->add_option("files", files, "CBBA documents")->required();
  matrix->add_option("--form", form, "sesquilinear|bilinear|scalar");
  matrix->add_option("--out", out_path, "output CSV ('-' for stdout)")->required();

  std::string sweep_name;
  edm::SweepSpec spec;
  spec.forms.clear();
  std::vector<std::string> forms;
  auto* sweep = app.add_subcommand("sweep", "Parameter sweep of a built-in example as CSV");
  sweep->add_option("example", sweep_name, "example1")->required();
  sweep->add_option("--theta", spec.theta, "1: X={B}, 2: X={A,B}")->required()->check(CLI::IsMember({1, 2}));
  sweep->add_option("--y", spec.y, "imaginary part")->default_val(0.0);
  sweep->add_option("--x-start", spec.x_start)->default_val(0.0);
  sweep->add_option("--x-end", spec.x_end)->default_val(1.0);
  sweep->add_option("--step", spec.x_step)->default_val(0.01);
  sweep->add_option("--forms", forms, "extra columns: bilinear,scalar")->delimiter(',');
  sweep->add_flag("--jousselme", spec.include_jousselme, "add the classical distance column (y = 0 only)");
  sweep->add_option("--out", out_path, "output CSV ('-' for stdout)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate) return run_validate(file);
    if (*distance) return run_distance(file1, file2, form, false);
    if (*oracle) return run_distance(file1, file2, form, true);
    if (*matrix) return run_matrix(files, form, out_path);
    if (*sweep) return run_sweep(sweep_name, spec, forms, out_path);
  } catch (const ExitWith& e) {
    return e.code;
  } catch (const edm::EvidenceError& e) {
    std::cerr << e.what() << "\n";
    return e.code() == edm::ErrorCode::InvalidArgument ? kUsage : kInvalid;
  }
  return kUsage;
}
