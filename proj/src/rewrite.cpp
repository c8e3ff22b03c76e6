// Copyright 2026 The ADQC Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "adqc/rewrite.hpp"

#include <map>

namespace adqc {

namespace {

int phase_of(const Command& c) {
    switch (c.index()) {
        case 0: return 0;  // Prep
        case 1: return 1;  // Interact
        case 2: return 2;  // Measure
        case 3:            // Correct
        case 4: return 3;  // Shift
        default: return -1;
    }
}

bool touches(const cmd::Interact& e, const QubitId& q) { return e.ancilla == q || e.system == q; }

const QubitId& other_end(const cmd::Interact& e, const QubitId& q) { return e.ancilla == q ? e.system : e.ancilla; }

// Picks the rule for the inverted pair (i, i + 1). `prev` is the command at i - 1, if any.
std::string choose_rule(const std::vector<Command>& cmds, std::size_t i) {
    const Command& a = cmds[i];
    const Command& b = cmds[i + 1];
    if (const auto* x = std::get_if<cmd::Correct>(&a)) {
        if (x->signal.empty()) return "drop-empty";
        if (i > 0) {
            if (const auto* y = std::get_if<cmd::Correct>(&cmds[i - 1])) {
                if (y->q == x->q && y->axis == x->axis) return "merge";
            }
        }
        if (const auto* e = std::get_if<cmd::Interact>(&b); e && touches(*e, x->q)) {
            return x->axis == cmd::Axis::X ? "etilde-x" : "etilde-z";
        }
        if (const auto* m = std::get_if<cmd::Measure>(&b); m && m->q == x->q) {
            const bool z = is_z_measurement(m->plane, m->angle);
            if (x->axis == cmd::Axis::X) return z ? "measure-z-x" : "measure-x";
            return z ? "measure-z-z" : "measure-z";
        }
        return "swap";
    }
    if (const auto* s = std::get_if<cmd::Shift>(&a)) {
        if (const auto* m = std::get_if<cmd::Measure>(&b); m && (m->s.contains(s->q) || m->t.contains(s->q))) {
            return "shift-measure";
        }
    }
    return "swap";
}

void replace(std::vector<Command>& cmds, std::size_t index, std::size_t width, std::vector<Command> with) {
    auto first = cmds.begin() + static_cast<std::ptrdiff_t>(index);
    cmds.erase(first, first + static_cast<std::ptrdiff_t>(width));
    cmds.insert(cmds.begin() + static_cast<std::ptrdiff_t>(index), with.begin(), with.end());
}

[[noreturn]] void mismatch(const std::string& rule, std::size_t index) {
    throw Error("rule '" + rule + "' does not apply at index " + std::to_string(index));
}

}  // namespace

bool is_standard(const Pattern& p) {
    int last = 0;
    for (const auto& c : p.commands) {
        const int ph = phase_of(c);
        if (ph < 0 || ph < last) return false;
        last = ph;
    }
    return true;
}

void apply_rule(std::vector<Command>& cmds, const std::string& rule, std::size_t index) {
    if (index >= cmds.size()) mismatch(rule, index);
    if (rule == "drop-empty") {
        const auto* x = std::get_if<cmd::Correct>(&cmds[index]);
        if (!x || !x->signal.empty()) mismatch(rule, index);
        replace(cmds, index, 1, {});
        return;
    }
    if (index + 1 >= cmds.size()) mismatch(rule, index);
    const Command a = cmds[index];
    const Command b = cmds[index + 1];
    if (rule == "swap") {
        replace(cmds, index, 2, {b, a});
        return;
    }
    if (rule == "merge") {
        const auto* x = std::get_if<cmd::Correct>(&a);
        const auto* y = std::get_if<cmd::Correct>(&b);
        if (!x || !y || x->q != y->q || x->axis != y->axis) mismatch(rule, index);
        replace(cmds, index, 2, {cmd::Correct{x->q, x->axis, x->signal ^ y->signal}});
        return;
    }
    if (rule == "shift-measure") {
        const auto* s = std::get_if<cmd::Shift>(&a);
        const auto* m = std::get_if<cmd::Measure>(&b);
        if (!s || !m) mismatch(rule, index);
        cmd::Measure out = *m;
        if (out.s.contains(s->q)) out.s ^= s->signal;
        if (out.t.contains(s->q)) out.t ^= s->signal;
        replace(cmds, index, 2, {out, a});
        return;
    }
    const auto* x = std::get_if<cmd::Correct>(&a);
    if (!x) mismatch(rule, index);
    if (rule == "etilde-x" || rule == "etilde-z") {
        const auto* e = std::get_if<cmd::Interact>(&b);
        if (!e || !touches(*e, x->q)) mismatch(rule, index);
        if (rule == "etilde-x") {
            if (x->axis != cmd::Axis::X) mismatch(rule, index);
            // X_q passes the interaction as X on the other end and Z on q.
            replace(cmds, index, 2,
                    {b, cmd::Correct{other_end(*e, x->q), cmd::Axis::X, x->signal},
                     cmd::Correct{x->q, cmd::Axis::Z, x->signal}});
        } else {
            if (x->axis != cmd::Axis::Z) mismatch(rule, index);
            replace(cmds, index, 2, {b, cmd::Correct{x->q, cmd::Axis::X, x->signal}});
        }
        return;
    }
    const auto* m = std::get_if<cmd::Measure>(&b);
    if (!m || m->q != x->q) mismatch(rule, index);
    cmd::Measure out = *m;
    if (rule == "measure-x" && x->axis == cmd::Axis::X) {
        out.s ^= x->signal;
        replace(cmds, index, 2, {out});
    } else if (rule == "measure-z" && x->axis == cmd::Axis::Z) {
        out.t ^= x->signal;
        replace(cmds, index, 2, {out});
    } else if (rule == "measure-z-x" && x->axis == cmd::Axis::X) {
        replace(cmds, index, 2, {out, cmd::Shift{x->q, x->signal}});
    } else if (rule == "measure-z-z" && x->axis == cmd::Axis::Z) {
        replace(cmds, index, 2, {out});
    } else {
        mismatch(rule, index);
    }
}

StandardizeResult standardize(const Pattern& p) {
    for (const auto& c : p.commands) {
        if (std::holds_alternative<cmd::LocalClifford>(c)) {
            throw Error("standardize: single-qubit gates have no rewrite rules; translate them first");
        }
    }
    auto violations = validate(p);
    if (!violations.empty()) {
        throw Error("standardize: invalid pattern (" + violations.front().rule + ": " + violations.front().message + ")");
    }
    StandardizeResult out{p, {}};
    auto& cmds = out.pattern.commands;
    const std::size_t n = p.commands.size();
    const std::size_t budget = 10 * n * n;
    std::size_t start = 0;
    for (;;) {
        // Everything before `start` is already in order, so the scan can resume
        // one step back from the last rewrite.
        std::size_t i = start;
        while (i + 1 < cmds.size() && phase_of(cmds[i]) <= phase_of(cmds[i + 1])) ++i;
        if (i + 1 >= cmds.size()) break;
        if (out.trace.size() >= budget) {
            throw RewriteBudgetError("standardize exceeded its budget of " + std::to_string(budget) +
                                     " rule applications");
        }
        std::string rule = choose_rule(cmds, i);
        std::size_t at = rule == "merge" ? i - 1 : i;
        const std::size_t before = cmds.size();
        apply_rule(cmds, rule, at);
        const std::size_t width = rule == "drop-empty" ? 1 : 2;
        out.trace.push_back({rule, at, cmds.size() + width - before});
        start = at > 0 ? at - 1 : 0;
    }
    return out;
}

Pattern replay(const Pattern& p, const RewriteTrace& trace) {
    Pattern out = p;
    for (const auto& step : trace) apply_rule(out.commands, step.rule, step.index);
    return out;
}

Pattern shift_signals(const Pattern& p) {
    // Turn outcome-flipping dependencies into explicit shifts.
    std::vector<Command> staged;
    for (const auto& c : p.commands) {
        const auto* m = std::get_if<cmd::Measure>(&c);
        if (!m) {
            staged.push_back(c);
            continue;
        }
        cmd::Measure out = *m;
        Signal flip;
        if (is_z_measurement(m->plane, m->angle)) {
            flip = m->s;
            out.s = {};
            out.t = {};
        } else if (m->plane == Plane::XY) {
            flip = m->t;
            out.t = {};
        } else if (m->plane == Plane::YZ) {
            flip = m->s;
            out.s = {};
        }
        staged.push_back(out);
        if (!flip.empty()) staged.push_back(cmd::Shift{m->q, flip});
    }

    // eff[q]: the shifted outcome of q written over raw outcomes.
    std::map<QubitId, Signal> eff;
    auto subst = [&](const Signal& s) {
        Signal out;
        for (const auto& q : s.members()) {
            auto it = eff.find(q);
            out ^= it == eff.end() ? Signal{q} : it->second;
        }
        return out;
    };
    Pattern out = p;
    out.commands.clear();
    for (const auto& c : staged) {
        if (const auto* sh = std::get_if<cmd::Shift>(&c)) {
            Signal delta = subst(sh->signal);
            auto it = eff.find(sh->q);
            Signal cur = it == eff.end() ? Signal{sh->q} : it->second;
            eff[sh->q] = cur ^ delta;
        } else if (const auto* m = std::get_if<cmd::Measure>(&c)) {
            cmd::Measure mm = *m;
            mm.s = subst(m->s);
            mm.t = subst(m->t);
            out.commands.push_back(mm);
        } else if (const auto* x = std::get_if<cmd::Correct>(&c)) {
            out.commands.push_back(cmd::Correct{x->q, x->axis, subst(x->signal)});
        } else {
            out.commands.push_back(c);
        }
    }
    return out;
}

}  // namespace adqc
