#pragma once

// Abstract reduction systems: derivations, traced objects, intensional
// strategies and their extensions. Everything here is generic over a
// ReductionSystem; term rewriting is one instance (see term_ars.hpp).

#include "strata/error.hpp"

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <deque>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace strata::ars {

/// A labeled step relation. `labels_from(a)` lists every step leaving a;
/// `fire(a, l)` realizes one of them and throws when l does not apply to a.
template <class Sys>
concept ReductionSystem = requires(const Sys& sys, const typename Sys::object_type& a,
                                   const typename Sys::label_type& l, const typename Sys::step_type& s) {
    { sys.labels_from(a) } -> std::convertible_to<std::vector<typename Sys::label_type>>;
    { sys.fire(a, l) } -> std::convertible_to<typename Sys::step_type>;
    { s.source } -> std::convertible_to<typename Sys::object_type>;
    { s.label } -> std::convertible_to<typename Sys::label_type>;
    { s.target } -> std::convertible_to<typename Sys::object_type>;
    requires std::totally_ordered<typename Sys::object_type>;
    requires std::totally_ordered<typename Sys::label_type>;
};

/// a₀ →φ₀ a₁ → … → aₙ, possibly empty.
template <ReductionSystem Sys>
class Derivation {
public:
    using object_type = typename Sys::object_type;
    using label_type = typename Sys::label_type;
    using step_type = typename Sys::step_type;

    explicit Derivation(object_type source) : source_(std::move(source)) {}

    /// Throws InvalidTrace unless the steps compose starting from source.
    Derivation(object_type source, std::vector<step_type> steps) : source_(std::move(source)) {
        for (auto& s : steps) append(std::move(s));
    }

    const object_type& source() const noexcept { return source_; }
    const object_type& target() const noexcept { return steps_.empty() ? source_ : steps_.back().target; }
    const std::vector<step_type>& steps() const noexcept { return steps_; }
    std::size_t length() const noexcept { return steps_.size(); }
    bool empty() const noexcept { return steps_.empty(); }

    void append(step_type step) {
        if (!(step.source == target())) throw InvalidTrace("derivation step does not start at the current target");
        steps_.push_back(std::move(step));
    }

    Derivation then(step_type step) const {
        Derivation d = *this;
        d.append(std::move(step));
        return d;
    }

    /// The first n steps.
    Derivation prefix(std::size_t n) const {
        Derivation d(source_);
        d.steps_.assign(steps_.begin(), steps_.begin() + static_cast<std::ptrdiff_t>(std::min(n, steps_.size())));
        return d;
    }

    friend bool operator==(const Derivation& a, const Derivation& b) {
        if (!(a.source_ == b.source_) || a.steps_.size() != b.steps_.size()) return false;
        for (std::size_t i = 0; i < a.steps_.size(); ++i) {
            if (!(a.steps_[i].label == b.steps_[i].label) || !(a.steps_[i].target == b.steps_[i].target)) return false;
        }
        return true;
    }

    friend bool operator<(const Derivation& a, const Derivation& b) {
        if (a.source_ < b.source_) return true;
        if (b.source_ < a.source_) return false;
        std::size_t n = std::min(a.steps_.size(), b.steps_.size());
        for (std::size_t i = 0; i < n; ++i) {
            const auto& x = a.steps_[i];
            const auto& y = b.steps_[i];
            if (x.label < y.label) return true;
            if (y.label < x.label) return false;
            if (x.target < y.target) return true;
            if (y.target < x.target) return false;
        }
        return a.steps_.size() < b.steps_.size();
    }

private:
    object_type source_;
    std::vector<step_type> steps_;
};

template <ReductionSystem Sys>
struct TraceEntry {
    typename Sys::object_type object;
    typename Sys::label_type label;

    friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

/// [α]a: the current object together with the history that reached it.
/// |α| is the number of completed steps.
template <ReductionSystem Sys>
class TracedObject {
public:
    using object_type = typename Sys::object_type;
    using entry_type = TraceEntry<Sys>;

    static TracedObject initial(object_type a) { return TracedObject(std::move(a)); }

    /// Validating constructor: replays the trace with `sys` and checks that it
    /// ends at `current`. Throws InvalidTrace.
    TracedObject(const Sys& sys, std::vector<entry_type> trace, object_type current)
        : trace_(std::move(trace)), current_(std::move(current)) {
        for (std::size_t i = 0; i < trace_.size(); ++i) {
            const object_type& expected = i + 1 < trace_.size() ? trace_[i + 1].object : current_;
            object_type reached = [&] {
                try {
                    return object_type(sys.fire(trace_[i].object, trace_[i].label).target);
                } catch (const Error& e) {
                    throw InvalidTrace("trace entry " + std::to_string(i) + " does not replay: " + e.what());
                }
            }();
            if (!(reached == expected)) throw InvalidTrace("trace entry " + std::to_string(i) + " does not reach its successor");
        }
    }

    const std::vector<entry_type>& trace() const noexcept { return trace_; }
    const object_type& current() const noexcept { return current_; }
    std::size_t history_length() const noexcept { return trace_.size(); }

    TracedObject advanced(const typename Sys::step_type& step) const {
        if (!(step.source == current_)) throw InvalidTrace("step does not start at the traced object");
        TracedObject next = *this;
        next.trace_.push_back(entry_type{step.source, step.label});
        next.current_ = step.target;
        return next;
    }

    /// The traced object reached after the first j steps of d.
    static TracedObject along(const Derivation<Sys>& d, std::size_t j) {
        TracedObject x = initial(d.source());
        for (std::size_t i = 0; i < j && i < d.length(); ++i) x = x.advanced(d.steps()[i]);
        return x;
    }

private:
    explicit TracedObject(object_type a) : current_(std::move(a)) {}

    std::vector<entry_type> trace_;
    object_type current_;
};

/// Partial function from traced objects to sets of steps leaving the current
/// object. An empty choice means the strategy is undefined there.
template <ReductionSystem Sys>
class IntensionalStrategy {
public:
    using label_type = typename Sys::label_type;
    using object_type = typename Sys::object_type;
    using choice_fn = std::function<std::vector<label_type>(const TracedObject<Sys>&)>;

    IntensionalStrategy(std::string name, choice_fn choose, bool memoryless = false)
        : name_(std::move(name)), choose_(std::move(choose)), memoryless_(memoryless) {}

    /// Chosen labels, sorted and without repeats.
    std::vector<label_type> choose(const TracedObject<Sys>& x) const {
        auto out = choose_(x);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    bool is_memoryless() const noexcept { return memoryless_; }
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
    choice_fn choose_;
    bool memoryless_;
};

/// Lifts a function of the current object, ignoring the trace.
template <ReductionSystem Sys>
IntensionalStrategy<Sys> memoryless(std::string name,
                                    std::function<std::vector<typename Sys::label_type>(const typename Sys::object_type&)> f) {
    return IntensionalStrategy<Sys>(
        std::move(name), [f = std::move(f)](const TracedObject<Sys>& x) { return f(x.current()); }, true);
}

/// The universal strategy: every step of the system.
template <ReductionSystem Sys>
IntensionalStrategy<Sys> all_steps(Sys sys) {
    return memoryless<Sys>("all", [sys = std::move(sys)](const typename Sys::object_type& a) {
        return std::vector<typename Sys::label_type>(sys.labels_from(a));
    });
}

/// Offers base's choice while |α| < k − 1 and nothing afterwards. The longest
/// derivation in its extension therefore has k − 1 steps.
template <ReductionSystem Sys>
IntensionalStrategy<Sys> bounded(std::size_t k, IntensionalStrategy<Sys> base) {
    if (k < 1) throw Error("bounded: k must be at least 1");
    std::string name = "bounded(" + std::to_string(k) + ", " + base.name() + ")";
    return IntensionalStrategy<Sys>(std::move(name), [k, base = std::move(base)](const TracedObject<Sys>& x) {
        // |α| < k − 1, written without unsigned underflow at k = 1
        if (x.history_length() + 1 < k) return base.choose(x);
        return std::vector<typename Sys::label_type>{};
    });
}

/// All derivations from `a` of length ≤ max_len whose every step was chosen by
/// ζ at its traced prefix. Prefix-closed. Throws when ζ offers a step that
/// does not apply (an unsound strategy).
template <ReductionSystem Sys>
std::set<Derivation<Sys>> extension(const Sys& sys, const IntensionalStrategy<Sys>& zeta,
                                    const typename Sys::object_type& a, std::size_t max_len) {
    std::set<Derivation<Sys>> out;
    struct Frame {
        Derivation<Sys> derivation;
        TracedObject<Sys> traced;
    };
    std::vector<Frame> stack;
    stack.push_back({Derivation<Sys>(a), TracedObject<Sys>::initial(a)});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (f.derivation.length() < max_len) {
            for (const auto& label : zeta.choose(f.traced)) {
                auto step = sys.fire(f.traced.current(), label);
                stack.push_back({f.derivation.then(step), f.traced.advanced(step)});
            }
        }
        out.insert(std::move(f.derivation));
    }
    return out;
}

template <ReductionSystem Sys>
bool is_prefix_closed(const std::set<Derivation<Sys>>& ds) {
    for (const auto& d : ds) {
        for (std::size_t n = 0; n < d.length(); ++n) {
            if (!ds.contains(d.prefix(n))) return false;
        }
    }
    return true;
}

/// Objects reachable under ζ at which ζ offers no further step. Each expanded
/// traced object costs one unit of fuel; FuelExhausted is raised if
/// unexplored objects remain when fuel runs out. Memoryless strategies are
/// explored as a graph (each object once), others as a tree of traces.
template <ReductionSystem Sys>
std::set<typename Sys::object_type> normal_forms_under(const Sys& sys, const IntensionalStrategy<Sys>& zeta,
                                                      const typename Sys::object_type& a, std::size_t fuel) {
    using object_type = typename Sys::object_type;
    std::set<object_type> normal;
    std::set<object_type> seen;
    std::deque<TracedObject<Sys>> frontier{TracedObject<Sys>::initial(a)};
    seen.insert(a);
    while (!frontier.empty()) {
        if (fuel == 0) throw FuelExhausted("normal form search ran out of fuel with " +
                                           std::to_string(frontier.size()) + " object(s) unexplored");
        --fuel;
        TracedObject<Sys> x = std::move(frontier.front());
        frontier.pop_front();
        auto labels = zeta.choose(x);
        if (labels.empty()) {
            normal.insert(x.current());
            continue;
        }
        for (const auto& label : labels) {
            auto step = sys.fire(x.current(), label);
            if (zeta.is_memoryless() && !seen.insert(step.target).second) continue;
            frontier.push_back(x.advanced(step));
        }
    }
    return normal;
}

/// Extensional view: a (possibly infinite) set of derivations, accessible
/// through membership and bounded enumeration.
template <ReductionSystem Sys>
class AbstractStrategy {
public:
    virtual ~AbstractStrategy() = default;
    virtual bool contains(const Derivation<Sys>& d) const = 0;
    /// Exactly the members with the given source and length ≤ max_len.
    virtual std::set<Derivation<Sys>> enumerate(const typename Sys::object_type& source, std::size_t max_len) const = 0;
};

/// A finite, explicitly listed set of derivations.
template <ReductionSystem Sys>
class FiniteStrategy final : public AbstractStrategy<Sys> {
public:
    FiniteStrategy() = default;
    explicit FiniteStrategy(std::set<Derivation<Sys>> members) : members_(std::move(members)) {}

    bool contains(const Derivation<Sys>& d) const override { return members_.contains(d); }

    std::set<Derivation<Sys>> enumerate(const typename Sys::object_type& source, std::size_t max_len) const override {
        std::set<Derivation<Sys>> out;
        for (const auto& d : members_) {
            if (d.source() == source && d.length() <= max_len) out.insert(d);
        }
        return out;
    }

private:
    std::set<Derivation<Sys>> members_;
};

/// The extension of an intensional strategy, viewed as a derivation set.
template <ReductionSystem Sys>
class ExtensionStrategy final : public AbstractStrategy<Sys> {
public:
    ExtensionStrategy(Sys sys, IntensionalStrategy<Sys> zeta) : sys_(std::move(sys)), zeta_(std::move(zeta)) {}

    bool contains(const Derivation<Sys>& d) const override {
        auto x = TracedObject<Sys>::initial(d.source());
        for (const auto& step : d.steps()) {
            auto chosen = zeta_.choose(x);
            if (!std::binary_search(chosen.begin(), chosen.end(), step.label)) return false;
            try {
                if (!(sys_.fire(x.current(), step.label).target == step.target)) return false;
            } catch (const Error&) {
                return false;
            }
            x = x.advanced(step);
        }
        return true;
    }

    std::set<Derivation<Sys>> enumerate(const typename Sys::object_type& source, std::size_t max_len) const override {
        return extension(sys_, zeta_, source, max_len);
    }

private:
    Sys sys_;
    IntensionalStrategy<Sys> zeta_;
};

/// ⟦ζ⟧a restricted to derivations of length ≤ max_len.
template <ReductionSystem Sys>
std::set<typename Sys::object_type> apply_abstract(const AbstractStrategy<Sys>& zeta, const typename Sys::object_type& a,
                                                   std::size_t max_len) {
    std::set<typename Sys::object_type> out;
    for (const auto& d : zeta.enumerate(a, max_len)) out.insert(d.target());
    return out;
}

} // namespace strata::ars
