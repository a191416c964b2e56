#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fractran/compiler.hpp"
#include "fractran/error.hpp"
#include "fractran/interpreter.hpp"
#include "fractran/program.hpp"
#include "fractran/rewrite.hpp"
#include "fractran/stream_spec.hpp"
#include "fractran/trs_format.hpp"
#include "fractran/turing.hpp"

namespace fractran::cli {

namespace {

std::optional<std::string> read_file(const std::string& source) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(source, ec)) return std::nullopt;
  std::ifstream in(source, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A file wins over an alias, an alias over inline text.
std::string program_text(const std::string& source) {
  if (auto text = read_file(source)) return *text;
  if (source == "primegame") return std::string(kPrimegameText);
  return source;
}

lsf::StreamSpec spec_for(const std::string& source) {
  if (!read_file(source) && source == "collatz") return lsf::collatz_spec();
  return lsf::induce_spec(parse_program(program_text(source)));
}

// Inline machines may separate lines with ';'.
std::string machine_text(const std::string& source) {
  if (auto text = read_file(source)) return *text;
  std::string out = source;
  std::replace(out.begin(), out.end(), ';', '\n');
  return out;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfTransition:
    case ErrorCode::TooLarge:
    case ErrorCode::Overflow: return kPrecondition;
    default: return kParseError;
  }
}

int cmd_run(const std::string& source, const std::string& start, std::uint64_t fuel, bool factored,
            std::ostream& out) {
  FractranProgram program = parse_program(program_text(source));
  auto n0 = parse_natural(start);
  if (!n0) throw Error(ErrorCode::Malformed, "start value must be a natural number, got '" + start + "'");
  Trace trace = run(program, *n0, fuel);
  for (std::size_t i = 0; i < trace.values.size(); ++i) {
    out << i << ": " << to_string(trace.values[i].value());
    if (factored) out << " = " << trace.values[i].factored();
    out << "\n";
  }
  return is_halted(trace.outcome) ? kOk : kUndecided;
}

int cmd_primes(std::size_t count, std::uint64_t fuel, std::ostream& out) {
  auto exps = powers_of_two_exponents(primegame(), 2, fuel, count);
  for (Exponent e : exps) out << e << "\n";
  return exps.size() == count ? kOk : kUndecided;
}

int cmd_compile_tm(const std::string& source, bool normalize, std::ostream& out) {
  tm::UnaryTM machine = tm::parse_tm(machine_text(source));
  if (normalize) machine = tm::normalize_no_self_loops(machine);
  auto compiled = compiler::compile(machine);
  out << compiler::format_listing(machine, compiled);
  return kOk;
}

int cmd_translate(const std::string& source, std::ostream& out) {
  out << lsf::emit_trs(spec_for(source));
  return kOk;
}

int cmd_probe(const std::string& source, std::uint64_t count, std::uint64_t fuel, unsigned workers,
              std::ostream& out) {
  auto report = lsf::probe_productivity(spec_for(source), count, fuel, workers);
  out << lsf::format_report(report, fuel);
  return report.all_produced() ? kOk : kUndecided;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractran interpreter, Turing machine compiler and stream-specification tools", "fractran"};
  app.require_subcommand(1);

  std::string source;
  std::string start;
  std::uint64_t fuel = 0;
  std::uint64_t count = 0;
  unsigned workers = 0;
  bool factored = false;
  bool normalize = false;

  auto* run = app.add_subcommand("run", "Run a program and print its trace");
  run->add_option("program", source, "File, 'primegame', or inline fractions")->required();
  run->add_option("n0", start, "Start value")->required();
  run->add_option("--fuel", fuel, "Step budget")->default_val(1000000);
  run->add_flag("--factored", factored, "Also print each value's factorisation");

  auto* primes = app.add_subcommand("primes", "Exponents of the powers of 2 visited by PRIMEGAME from 2");
  primes->add_option("--count", count, "How many exponents")->default_val(5);
  primes->add_option("--fuel", fuel, "Step budget")->default_val(10000000);

  auto* compile = app.add_subcommand("compile-tm", "Compile a unary Turing machine to Fractran");
  compile->add_option("machine", source, "File or inline text (';' separates lines)")->required();
  compile->add_flag("--normalize", normalize, "Remove self-transitions first");

  auto* translate = app.add_subcommand("translate", "Print the induced stream specification as a TRS");
  translate->add_option("program", source, "File, 'primegame', 'collatz', or inline fractions")->required();

  auto* probe = app.add_subcommand("probe", "Evaluate the first elements of the induced stream");
  probe->add_option("program", source, "File, 'primegame', 'collatz', or inline fractions")->required();
  probe->add_option("--count", count, "Number of elements")->default_val(10);
  probe->add_option("--fuel", fuel, "Rewrite steps per element")->default_val(100000);
  probe->add_option("--workers", workers, "Threads (0 = hardware concurrency)")->default_val(0);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (*run) {
      if (fuel == 0) throw Error(ErrorCode::FuelZero, "--fuel must be at least 1");
      return cmd_run(source, start, fuel, factored, out);
    }
    if (*primes) return cmd_primes(count, fuel, out);
    if (*compile) return cmd_compile_tm(source, normalize, out);
    if (*translate) return cmd_translate(source, out);
    if (*probe) return cmd_probe(source, count, fuel, workers, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kParseError;
}

}  // namespace fractran::cli
