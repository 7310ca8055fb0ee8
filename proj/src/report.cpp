#include "hicat/report.hpp"

#include <algorithm>

namespace hicat {

void VerificationReport::count(const std::string& name, long long delta)
{
    auto it = std::find_if(counters.begin(), counters.end(), [&](const auto& c) { return c.first == name; });
    if (it == counters.end()) {
        counters.emplace_back(name, delta);
    } else {
        it->second += delta;
    }
}

long long VerificationReport::counter(const std::string& name) const
{
    auto it = std::find_if(counters.begin(), counters.end(), [&](const auto& c) { return c.first == name; });
    return it == counters.end() ? 0 : it->second;
}

void VerificationReport::fail(std::string witness)
{
    if (pass) counterexample = std::move(witness);
    pass = false;
}

void VerificationReport::absorb(const VerificationReport& other, const std::string& prefix)
{
    for (const auto& [name, value] : other.counters) count(prefix + name, value);
    for (const auto& note : other.notes) notes.push_back(prefix + note);
    if (!other.pass) fail(prefix + other.counterexample.value_or("unspecified failure"));
}

}  // namespace hicat
