#include "fractran/rewrite.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "fractran/error.hpp"

namespace fractran::lsf {

namespace {

// Pending context around the focus: head(.) or tail^count(.).
struct Frame {
  bool is_head;
  BigInt count;
};

bool is_constructor(const Term& t) { return t.kind() == Kind::Bullet || t.kind() == Kind::Cons; }

TermPtr rebuild(TermPtr focus, const std::vector<Frame>& frames) {
  for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
    focus = it->is_head ? head(std::move(focus)) : tail(std::move(focus), it->count);
  }
  return focus;
}

}  // namespace

Evaluation evaluate(const StreamSpec& spec, TermPtr term, std::uint64_t fuel, const Observer& observer,
                    bool batch_skips) {
  if (fuel == 0 && !is_constructor(*term)) throw Error(ErrorCode::FuelZero, "fuel must be at least 1");
  std::vector<Frame> frames;
  TermPtr focus = std::move(term);
  std::uint64_t steps = 0;

  for (;;) {
    const Term& t = *focus;
    switch (t.kind()) {
      case Kind::Head:
        if (frames.empty() && observer) observer(t, steps);
        frames.push_back({true, 0});
        focus = t.child(0);
        continue;
      case Kind::Tail:
        if (!frames.empty() && !frames.back().is_head) {
          frames.back().count += t.number();
        } else {
          frames.push_back({false, t.number()});
        }
        focus = t.child(0);
        continue;
      case Kind::Bullet:
        if (frames.empty()) return Produced{steps, focus};
        throw Error(ErrorCode::Malformed, "head or tail applied to a data term");
      case Kind::Var:
        throw Error(ErrorCode::Malformed, "cannot evaluate a term with variables");
      case Kind::Cons:
        if (frames.empty()) return Produced{steps, focus};
        break;
      case Kind::Root:
        if (t.name() != spec.root_name()) throw Error(ErrorCode::Malformed, "unknown constant " + t.name());
        break;
      case Kind::Mod:
      case Kind::Zip:
        break;
    }

    if (steps == fuel) return Exhausted{rebuild(focus, frames), fuel};

    // Under tail^c, a mod or zip step is always followed by the tail-cons step
    // that drops the emitted element. Take m such pairs at once.
    if (batch_skips && (t.kind() == Kind::Mod || t.kind() == Kind::Zip) && !frames.empty() &&
        !frames.back().is_head && fuel - steps >= 2) {
      Frame& top = frames.back();
      BigInt m = std::min(top.count, from_u64((fuel - steps) / 2));
      if (t.kind() == Kind::Mod) {
        focus = mod(t.number(), tail(t.child(0), t.number() * m));
      } else {
        focus = zip(t.zip_source(), t.number() + m);
      }
      steps += 2 * m.get_ui();
      top.count -= m;
      if (top.count == 0) frames.pop_back();
      continue;
    }

    ++steps;
    switch (t.kind()) {
      case Kind::Cons: {
        Frame& top = frames.back();
        if (top.is_head) {
          frames.pop_back();
          focus = t.child(0);
        } else {
          focus = t.child(1);
          if (--top.count == 0) frames.pop_back();
        }
        break;
      }
      case Kind::Root:
        focus = spec.root_rhs();
        break;
      case Kind::Mod: {
        const TermPtr& s = t.child(0);
        focus = cons(head(s), mod(t.number(), tail(s, t.number())));
        break;
      }
      case Kind::Zip:
        focus = cons(head(t.zip_argument(0)), zip(t.zip_source(), t.number() + 1));
        break;
      default:
        break;
    }
  }
}

Evaluation rewrite_nth(const StreamSpec& spec, const BigInt& n, std::uint64_t fuel, const Observer& observer) {
  return evaluate(spec, head(tail(spec.root(), n)), fuel, observer);
}

ProbeReport probe_productivity(const StreamSpec& spec, std::uint64_t count, std::uint64_t fuel, unsigned workers) {
  if (fuel == 0 && count > 0) throw Error(ErrorCode::FuelZero, "fuel must be at least 1");
  ProbeReport report{std::vector<ProbeEntry>(count), 0};
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(count, 1)));

  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t i; (i = next.fetch_add(1)) < count;) {
      auto e = rewrite_nth(spec, from_u64(i), fuel);
      if (auto* p = std::get_if<Produced>(&e)) {
        report.entries[i] = {i, true, p->steps};
      } else {
        report.entries[i] = {i, false, fuel};
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  while (report.productive_up_to < count && report.entries[report.productive_up_to].produced) {
    ++report.productive_up_to;
  }
  return report;
}

std::string format_report(const ProbeReport& report, std::uint64_t fuel) {
  std::string out;
  std::uint64_t produced = 0;
  for (const auto& e : report.entries) {
    if (e.produced) {
      ++produced;
      out += std::to_string(e.index) + ": produced steps=" + std::to_string(e.steps) + "\n";
    } else {
      out += std::to_string(e.index) + ": exhausted fuel=" + std::to_string(fuel) + "\n";
    }
  }
  out += "summary: produced " + std::to_string(produced) + "/" + std::to_string(report.entries.size()) +
         ", productive_up_to=" + std::to_string(report.productive_up_to) + "\n";
  return out;
}

}  // namespace fractran::lsf
