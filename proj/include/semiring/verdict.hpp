#pragma once

#include <string>
#include <utility>

namespace semiring {

/// Outcome of a theorem check. A failing verdict carries a witness that can
/// be re-checked without the code that produced it; the note records scope
/// (bounds, seeds) or the justification for constant verdicts.
struct Verdict {
    bool holds = false;
    std::string witness;
    std::string note;

    static Verdict pass(std::string note = {}) {
        return Verdict{true, {}, std::move(note)};
    }
    static Verdict fail(std::string witness, std::string note = {}) {
        return Verdict{false, std::move(witness), std::move(note)};
    }

    explicit operator bool() const { return holds; }
};

}  // namespace semiring
