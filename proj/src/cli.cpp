#include "recurseq/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "recurseq/contfrac.hpp"
#include "recurseq/errors.hpp"
#include "recurseq/ratio_accel.hpp"
#include "recurseq/recurrence.hpp"
#include "recurseq/rootfind.hpp"

namespace recurseq::cli {

namespace {

using nlohmann::json;

// Arrow used in root traces.
constexpr std::string_view kArrow = "→";

struct GlobalOptions {
  std::string format = "rational";
  std::optional<Index> max_index;
};

struct Context {
  OutputFormat format;
  Index max_index = kDefaultMaxIndex;
  std::ostream& out;
  std::ostream& err;
};

Index max_index_from_env() {
  const char* env = std::getenv("RECURSEQ_MAX_INDEX");
  if (env == nullptr || *env == '\0') {
    return kDefaultMaxIndex;
  }
  std::string_view text(env);
  Index value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
    throw InvalidArgument("RECURSEQ_MAX_INDEX must be a positive integer, got '" +
                          std::string(text) + "'");
  }
  return value;
}

void emit_record(const Context& ctx, json record) { ctx.out << record.dump() << '\n'; }

void emit_indexed(const Context& ctx, Index index, const Rational& value, const std::string& method,
                  json extra = json::object()) {
  if (ctx.format.mode == OutputFormat::Mode::Records) {
    json record = {{"index", index}, {"value", to_string(value)}, {"method", method}};
    record.update(extra);
    emit_record(ctx, std::move(record));
  } else {
    ctx.out << index << ' ' << format_value(value, ctx.format) << '\n';
  }
}

void emit_single(const Context& ctx, Index index, const Rational& value,
                 const std::string& method) {
  if (ctx.format.mode == OutputFormat::Mode::Records) {
    emit_record(ctx, {{"index", index}, {"value", to_string(value)}, {"method", method}});
  } else {
    ctx.out << format_value(value, ctx.format) << '\n';
  }
}

// ---- seq / ratio --------------------------------------------------------

struct SeqArgs {
  std::string p;
  std::string q;
  std::string a0 = "0";
  std::string a1 = "1";
  Index n = 0;
};

int cmd_seq(const SeqArgs& args, const Context& ctx) {
  if (args.n < 0) {
    throw InvalidArgument("-n must be >= 0");
  }
  LinRecSequence seq{parse_integer(args.a0), parse_integer(args.a1),
                     {parse_integer(args.p), parse_integer(args.q)}};
  emit_single(ctx, args.n, Rational(term(seq, args.n, ctx.max_index)), "seq");
  return kOk;
}

struct RatioArgs {
  std::string p;
  std::string q;
  std::optional<std::string> a0;
  std::optional<std::string> a1;
  Index n = 2;
};

int cmd_ratio(const RatioArgs& args, const Context& ctx) {
  RecurrenceParams params{parse_integer(args.p), parse_integer(args.q)};
  if (args.a0 || args.a1) {
    LinRecSequence seq{parse_integer(args.a0.value_or("0")), parse_integer(args.a1.value_or("1")),
                       params};
    emit_single(ctx, args.n, general_ratio_y(seq, args.n, ctx.max_index), "general-ratio");
  } else {
    emit_single(ctx, args.n, ratio_x(params, args.n, ctx.max_index), "ratio");
  }
  return kOk;
}

// ---- accelerate ---------------------------------------------------------

struct AccelArgs {
  std::string p;
  std::string q;
  std::string scheme;
  Index count = 5;
  Index start = 2;
  Index n = 2;
  Index m = 1;
  Index h = 2;
  Index k = 1;
  Index i = 2;
  Index j = 3;
  Index s = 1;
  Index t = -1;
};

int cmd_accelerate(const AccelArgs& args, const Context& ctx) {
  RecurrenceParams params{parse_integer(args.p), parse_integer(args.q)};
  auto emit_ratios = [&](const std::vector<RatioEntry>& entries) {
    for (const auto& e : entries) emit_indexed(ctx, e.index, e.x, args.scheme);
  };
  auto emit_accel = [&](const std::vector<AccelEntry>& entries) {
    for (const auto& e : entries) {
      emit_indexed(ctx, e.index, e.x, args.scheme,
                   {{"u", to_string(e.u)}, {"t", to_string(e.t)}});
    }
  };

  if (args.scheme == "shift") {
    emit_ratios(shift_chain(params, args.n, args.m, args.count, ctx.max_index));
  } else if (args.scheme == "double") {
    emit_ratios(doubling_chain(params, args.start, args.count, ctx.max_index));
  } else if (args.scheme == "fib-index") {
    emit_ratios(fibonacci_index_chain(params, args.count, ctx.max_index));
  } else if (args.scheme == "arith") {
    emit_accel(arithmetic_index_accel(params, args.h, args.k, args.count, ctx.max_index));
  } else if (args.scheme == "general") {
    emit_accel(accelerate_general(params, {args.i, args.j, args.s, args.t}, args.count,
                                  ctx.max_index));
  } else {
    throw InvalidArgument("unknown scheme '" + args.scheme + "'");
  }
  return kOk;
}

// ---- root ---------------------------------------------------------------

struct RootArgs {
  std::string a;
  std::string b;
  std::string c;
  std::string method = "newton";
  unsigned digits = 10;
  unsigned max_iterations = 64;
  bool trace = false;
};

int cmd_root(const RootArgs& args, const Context& ctx) {
  if (args.digits < 1) {
    throw InvalidArgument("--digits must be >= 1");
  }
  QuadraticABC f{parse_integer(args.a), parse_integer(args.b), parse_integer(args.c)};
  Method method = parse_method(args.method);
  RootApproximation root = approximate_root(f, method, args.digits, args.max_iterations);
  const bool records = ctx.format.mode == OutputFormat::Mode::Records;

  if (records) {
    emit_record(ctx, {{"value", root.decimal},
                      {"digits", args.digits},
                      {"method", method.name()},
                      {"exact", to_string(root.value)}});
  } else {
    ctx.out << root.decimal << '\n';
  }
  if (!args.trace) {
    return kOk;
  }
  for (std::size_t n = 0; n < root.iterates.size(); ++n) {
    const Rational& value = root.iterates[n];
    if (root.seed == SeedKind::Convergent) {
      Integer cf_index = method_cf_index(method, static_cast<Index>(n));
      if (records) {
        emit_record(ctx, {{"index", cf_index.get_str()},
                          {"value", to_string(value)},
                          {"method", method.name()}});
      } else {
        ctx.out << "idx " << cf_index.get_str() << ' ' << kArrow << ' ' << to_string(value)
                << '\n';
      }
    } else if (records) {
      emit_record(ctx, {{"iterate", n}, {"value", to_string(value)}, {"method", method.name()}});
    } else {
      ctx.out << "iter " << n << ' ' << kArrow << ' ' << to_string(value) << '\n';
    }
  }
  return kOk;
}

// ---- cf -----------------------------------------------------------------

struct CfArgs {
  std::optional<std::string> text;
  std::optional<std::string> a;
  std::optional<std::string> b;
  std::optional<std::string> c;
  std::string form = "direct";
  Index count = 10;
};

int cmd_cf(const CfArgs& args, const Context& ctx) {
  const bool quad = args.a || args.b || args.c;
  if (quad == args.text.has_value()) {
    throw InvalidArgument("give either --cf TEXT or all of -a, -b, -c");
  }
  if (quad && !(args.a && args.b && args.c)) {
    throw InvalidArgument("-a, -b and -c must be given together");
  }
  const bool records = ctx.format.mode == OutputFormat::Mode::Records;

  auto emit_record_or_value = [&](Index index, const Rational& value, json extra) {
    if (records) {
      json record = {{"index", index}, {"value", to_string(value)}, {"method", args.form}};
      record.update(extra);
      emit_record(ctx, std::move(record));
    } else {
      ctx.out << format_value(value, ctx.format) << '\n';
    }
  };

  if (args.form == "sigma") {
    if (!quad) {
      throw InvalidArgument("--form sigma applies to the periodic fraction given by -a -b -c");
    }
    QuadCFConvergents table(
        PeriodicQuadCF(parse_integer(*args.a), parse_integer(*args.b), parse_integer(*args.c)),
        ctx.max_index);
    for (Index n = 0; n < args.count; ++n) {
      emit_record_or_value(n, table.convergent(n), json::object());
    }
    return kOk;
  }

  std::optional<RationalCF> cf;
  if (quad) {
    cf = PeriodicQuadCF(parse_integer(*args.a), parse_integer(*args.b), parse_integer(*args.c))
             .expand();
  } else {
    cf = RationalCF::parse(*args.text);
  }
  check_index_cap(args.count, ctx.max_index);

  if (args.form == "direct") {
    for (const auto& rec : convergents_direct(*cf, args.count)) {
      emit_record_or_value(rec.index, *rec.value, {{"p", to_string(rec.p)}, {"q", to_string(rec.q)}});
    }
  } else if (args.form == "integer") {
    for (const auto& rec : convergents_integer(*cf, args.count)) {
      emit_record_or_value(rec.index, *rec.value,
                           {{"s", rec.s.get_str()}, {"t", rec.t.get_str()}, {"u", rec.u.get_str()}});
    }
  } else {
    throw InvalidArgument("unknown --form '" + args.form + "' (direct, integer, sigma)");
  }
  return kOk;
}

// ---- verify -------------------------------------------------------------

struct Outcome {
  enum class Status { Pass, Fail, Skip };
  Status status = Status::Pass;
  std::string label;
  std::string detail;
};

using Instance = std::function<Outcome()>;

/// Runs instances on a small worker pool; results keep input order.
std::vector<Outcome> run_instances(const std::vector<Instance>& instances, unsigned jobs) {
  std::vector<Outcome> results(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      results[i] = instances[i]();
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(instances.size())));
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < jobs; ++w) pool.emplace_back(worker);
  worker();
  return results;
}

Outcome compare(std::string label, const Rational& lhs, const Rational& rhs) {
  if (lhs == rhs) {
    return {Outcome::Status::Pass, std::move(label), {}};
  }
  return {Outcome::Status::Fail, std::move(label),
          "lhs=" + to_string(lhs) + " rhs=" + to_string(rhs)};
}

Outcome from_check(std::string label, const IdentityCheck& check) {
  return compare(std::move(label), check.lhs, check.rhs);
}

/// Degenerate denominators mean the instance cannot be evaluated at all,
/// which is reported separately from a counterexample.
Instance guarded(std::string label, std::function<Outcome()> body) {
  return [label = std::move(label), body = std::move(body)]() -> Outcome {
    try {
      return body();
    } catch (const DegenerateRatio& e) {
      return {Outcome::Status::Skip, label, e.what()};
    } catch (const DegenerateStep& e) {
      return {Outcome::Status::Skip, label, e.what()};
    } catch (const DegenerateConvergent& e) {
      return {Outcome::Status::Skip, label, e.what()};
    }
  };
}

struct VerifyArgs {
  std::string identity;
  std::optional<Index> n_max;
  Index k_max = 0;
  std::string p = "1";
  std::string q = "-1";
  std::string a = "1";
  std::string b = "1";
  std::string c = "1";
  unsigned jobs = 0;
};

std::vector<Instance> method_map_instances(const RecurrenceParams& params, Index k_max,
                                           Index max_index) {
  if (params.discriminant() == 0) {
    throw InvalidArgument("index maps are only claimed for distinct roots (p^2 != 4q)");
  }
  if (k_max < 2) {
    throw InvalidArgument("--k-max must be >= 2");
  }
  const QuadraticABC f{1, params.p, -params.q};
  const QuadraticPQ fpq{params.p, params.q};
  std::vector<Instance> out;
  for (Index k = 2; k <= k_max; ++k) {
    out.push_back(guarded("newton k=" + std::to_string(k), [=] {
      return compare("newton k=" + std::to_string(k),
                     newton_step(f, ratio_x(params, k, max_index)),
                     ratio_x(params, newton_index(k), max_index));
    }));
    out.push_back(guarded("halley k=" + std::to_string(k), [=] {
      return compare("halley k=" + std::to_string(k),
                     halley_step(fpq, ratio_x(params, k, max_index)),
                     ratio_x(params, halley_index(k), max_index));
    }));
    for (unsigned d = 1; d <= 5; ++d) {
      std::string label = "householder d=" + std::to_string(d) + " k=" + std::to_string(k);
      out.push_back(guarded(label, [=] {
        return compare(label, householder_step(fpq, ratio_x(params, k, max_index), d),
                       ratio_x(params, householder_index(k, d), max_index));
      }));
    }
  }
  // Secant over g_n = F_n+2 + 1, as far as the Householder instances reach.
  const Index reach = householder_index(k_max, 5);
  std::vector<Index> g = secant_index_sequence(2);
  while (true) {
    const Index target = g[g.size() - 1] + g[g.size() - 2] - 1;
    if (target > reach) break;
    g.push_back(target);
    const Index prev = g[g.size() - 2];
    const Index prev2 = g[g.size() - 3];
    std::string label = "secant g=" + std::to_string(target);
    out.push_back(guarded(label, [=] {
      return compare(label,
                     secant_step(f, ratio_x(params, prev, max_index),
                                 ratio_x(params, prev2, max_index)),
                     ratio_x(params, target, max_index));
    }));
  }
  return out;
}

std::vector<Instance> cf_threeway_instances(const PeriodicQuadCF& qcf, Index n_max,
                                            Index max_index) {
  check_index_cap(n_max + 2, max_index);
  auto direct = std::make_shared<std::vector<ConvergentRecord>>(
      convergents_direct(qcf.expand(), n_max + 1, OnDegenerate::Skip));
  auto integer = std::make_shared<std::vector<ConvergentRecord>>(
      convergents_integer(qcf.expand(), n_max + 1, OnDegenerate::Skip));
  auto table = std::make_shared<QuadCFConvergents>(qcf, max_index);
  const RecurrenceParams sigma = qcf.sigma_params();
  std::vector<Instance> out;
  for (Index n = 0; n <= n_max; ++n) {
    std::string label = "cf n=" + std::to_string(n);
    out.push_back(guarded(label, [=]() -> Outcome {
      const auto& d = (*direct)[n];
      const auto& i = (*integer)[n];
      if (!d.value || !i.value) {
        return {Outcome::Status::Skip, label, "degenerate convergent"};
      }
      const Rational s = table->convergent(n);
      if (*d.value != *i.value || *d.value != s) {
        return {Outcome::Status::Fail, label,
                "direct=" + to_string(*d.value) + " integer=" + to_string(*i.value) +
                    " sigma=" + to_string(s)};
      }
      return compare(label, qcf.a * s, ratio_x(sigma, n + 2, max_index));
    }));
  }
  return out;
}

int cmd_verify(const VerifyArgs& args, const Context& ctx) {
  std::vector<Instance> instances;
  const Index cap = ctx.max_index;
  if (args.identity == "nested-fib") {
    for (Index n = 3; n <= args.n_max.value_or(20); ++n) {
      std::string label = "nested-fib n=" + std::to_string(n);
      instances.push_back(guarded(label, [=] {
        return from_check(label, check_nested_fibonacci_identity(n, cap));
      }));
    }
  } else if (args.identity == "fkn") {
    const Index k_max = args.k_max > 0 ? args.k_max : 5;
    for (Index k = 1; k <= k_max; ++k) {
      for (Index n = 2; n <= args.n_max.value_or(15); ++n) {
        std::string label = "fkn k=" + std::to_string(k) + " n=" + std::to_string(n);
        instances.push_back(
            guarded(label, [=] { return from_check(label, check_fkn_identity(k, n, cap)); }));
      }
    }
  } else if (args.identity == "cubic-fib") {
    for (Index n = 3; n <= args.n_max.value_or(50); ++n) {
      std::string label = "cubic-fib n=" + std::to_string(n);
      instances.push_back(guarded(
          label, [=] { return from_check(label, check_cubic_fibonacci_identity(n, cap)); }));
    }
  } else if (args.identity == "method-maps") {
    instances = method_map_instances({parse_integer(args.p), parse_integer(args.q)},
                                     args.k_max > 0 ? args.k_max : 32, cap);
  } else if (args.identity == "cf-threeway") {
    instances = cf_threeway_instances(
        PeriodicQuadCF(parse_integer(args.a), parse_integer(args.b), parse_integer(args.c)),
        args.n_max.value_or(50), cap);
  } else {
    throw InvalidArgument("unknown identity '" + args.identity + "'");
  }
  if (instances.empty()) {
    throw InvalidArgument("the requested range contains no instances");
  }

  const unsigned jobs = args.jobs > 0 ? args.jobs : std::max(1u, std::thread::hardware_concurrency());
  std::vector<Outcome> results = run_instances(instances, jobs);

  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  for (const auto& r : results) {
    switch (r.status) {
      case Outcome::Status::Pass:
        ++passed;
        ctx.out << "PASS " << r.label << '\n';
        break;
      case Outcome::Status::Fail:
        ++failed;
        ctx.out << "FAIL " << r.label << ' ' << r.detail << '\n';
        break;
      case Outcome::Status::Skip:
        ++skipped;
        ctx.out << "SKIP " << r.label << ' ' << r.detail << '\n';
        break;
    }
  }
  const std::size_t total = passed + failed;
  ctx.out << (failed == 0 ? "PASS " : "FAIL ") << passed << '/' << total;
  if (skipped > 0) {
    ctx.out << " (" << skipped << " skipped)";
  }
  ctx.out << '\n';
  return failed == 0 ? kOk : kVerificationFailed;
}

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "rational") {
    return {OutputFormat::Mode::Rational, 0};
  }
  if (text == "records") {
    return {OutputFormat::Mode::Records, 0};
  }
  constexpr std::string_view prefix = "decimal:";
  if (text.rfind(prefix, 0) == 0) {
    std::string_view rest = text.substr(prefix.size());
    unsigned digits = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), digits);
    if (ec == std::errc() && ptr == rest.data() + rest.size() && digits >= 1) {
      return {OutputFormat::Mode::Decimal, digits};
    }
  }
  throw InvalidArgument("--format must be rational, decimal:N (N >= 1) or records, got '" +
                        std::string(text) + "'");
}

std::string format_value(const Rational& value, const OutputFormat& format) {
  if (format.mode == OutputFormat::Mode::Decimal) {
    return to_decimal(value, format.digits);
  }
  return to_string(value);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic for order-2 linear recurrences and their accelerations",
               "recurseq"};
  // -h is taken by "accelerate --h"; keep only the long help flag everywhere.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "rational | decimal:N | records");
  app.add_option("--max-index", global.max_index,
                 "refuse indices beyond this (default 10^7, or $RECURSEQ_MAX_INDEX)")
      ->check(CLI::PositiveNumber);

  SeqArgs seq;
  auto* seq_cmd = app.add_subcommand("seq", "n-th term of W(a0, a1, p, q)");
  seq_cmd->add_option("-p,--p", seq.p, "recurrence coefficient p")->required();
  seq_cmd->add_option("-q,--q", seq.q, "recurrence coefficient q")->required();
  seq_cmd->add_option("--a0", seq.a0, "initial term a0");
  seq_cmd->add_option("--a1", seq.a1, "initial term a1");
  seq_cmd->add_option("-n,--n", seq.n, "index")->required();

  RatioArgs ratio;
  auto* ratio_cmd = app.add_subcommand("ratio", "x_n = U_n / U_n-1, or a_n / a_n-1 with --a0/--a1");
  ratio_cmd->add_option("-p,--p", ratio.p)->required();
  ratio_cmd->add_option("-q,--q", ratio.q)->required();
  ratio_cmd->add_option("--a0", ratio.a0);
  ratio_cmd->add_option("--a1", ratio.a1);
  ratio_cmd->add_option("-n,--n", ratio.n)->required();

  AccelArgs accel;
  auto* accel_cmd = app.add_subcommand("accelerate", "accelerated subsequences of x");
  accel_cmd->add_option("-p,--p", accel.p)->required();
  accel_cmd->add_option("-q,--q", accel.q)->required();
  accel_cmd->add_option("--scheme", accel.scheme, "shift | double | fib-index | arith | general")
      ->required()
      ->check(CLI::IsMember({"shift", "double", "fib-index", "arith", "general"}));
  accel_cmd->add_option("--count", accel.count)->check(CLI::PositiveNumber);
  accel_cmd->add_option("--start", accel.start, "double: starting index");
  accel_cmd->add_option("--n", accel.n, "shift: starting index");
  accel_cmd->add_option("--m", accel.m, "shift: step");
  accel_cmd->add_option("--h", accel.h, "arith: first index");
  accel_cmd->add_option("--k", accel.k, "arith: step");
  accel_cmd->add_option("--i", accel.i, "general: g_0");
  accel_cmd->add_option("--j", accel.j, "general: g_1");
  accel_cmd->add_option("--s", accel.s, "general: g_n = s g_n-1 - t g_n-2");
  accel_cmd->add_option("--t", accel.t, "general: g_n = s g_n-1 - t g_n-2");

  RootArgs root;
  auto* root_cmd = app.add_subcommand("root", "larger-modulus root of a t^2 - b t - c");
  root_cmd->add_option("-a,--a", root.a)->required();
  root_cmd->add_option("-b,--b", root.b)->required();
  root_cmd->add_option("-c,--c", root.c)->required();
  root_cmd->add_option("--method", root.method, "secant | newton | halley | householder:D");
  root_cmd->add_option("--digits", root.digits)->check(CLI::PositiveNumber);
  root_cmd->add_option("--max-iter", root.max_iterations)->check(CLI::PositiveNumber);
  root_cmd->add_flag("--trace", root.trace, "print CF indices and exact iterates");

  CfArgs cf;
  auto* cf_cmd = app.add_subcommand("cf", "convergents of a rational-quotient continued fraction");
  cf_cmd->add_option("--cf", cf.text, "e.g. \"1/2, 1/3 | period=2\"");
  cf_cmd->add_option("-a,--a", cf.a, "periodic fraction [b/a, b/c]");
  cf_cmd->add_option("-b,--b", cf.b);
  cf_cmd->add_option("-c,--c", cf.c);
  cf_cmd->add_option("--form", cf.form, "direct | integer | sigma");
  cf_cmd->add_option("--count", cf.count)->check(CLI::PositiveNumber);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "batch-check identities and index maps");
  verify_cmd->add_option("identity", verify.identity,
                         "nested-fib | fkn | cubic-fib | method-maps | cf-threeway")
      ->required()
      ->check(CLI::IsMember({"nested-fib", "fkn", "cubic-fib", "method-maps", "cf-threeway"}));
  verify_cmd->add_option("--n-max", verify.n_max);
  verify_cmd->add_option("--k-max", verify.k_max);
  verify_cmd->add_option("-p,--p", verify.p);
  verify_cmd->add_option("-q,--q", verify.q);
  verify_cmd->add_option("-a,--a", verify.a);
  verify_cmd->add_option("-b,--b", verify.b);
  verify_cmd->add_option("-c,--c", verify.c);
  verify_cmd->add_option("--jobs", verify.jobs, "worker threads (default: all cores)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Context ctx{parse_output_format(global.format),
                global.max_index.value_or(max_index_from_env()), out, err};
    if (*seq_cmd) return cmd_seq(seq, ctx);
    if (*ratio_cmd) return cmd_ratio(ratio, ctx);
    if (*accel_cmd) return cmd_accelerate(accel, ctx);
    if (*root_cmd) return cmd_root(root, ctx);
    if (*cf_cmd) return cmd_cf(cf, ctx);
    if (*verify_cmd) return cmd_verify(verify, ctx);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const NonRealRoots& e) {
    err << "error: " << e.what() << '\n';
    return kNonReal;
  } catch (const Error& e) {
    // Degenerate ratios, steps, convergents, singular matrices, stalled iterations.
    err << "error: " << e.what() << '\n';
    return kDegenerate;
  }
  return kUsage;
}

}  // namespace recurseq::cli
