#include "oqf/report.hpp"

#include <ostream>

#include <json.hpp>

namespace oqf {

void Report::absorb(const Report& other) {
    for (const auto& it : other.items) items.push_back(it);
}

bool Report::has_red_flag() const {
    for (const auto& it : items)
        if (it.red_flag && it.verdict == Verdict::Fail) return true;
    return false;
}

bool Report::has_failure() const {
    for (const auto& it : items)
        if (it.verdict == Verdict::Fail) return true;
    return false;
}

const CheckItem* Report::find(const std::string& name) const {
    for (const auto& it : items)
        if (it.name == name) return &it;
    return nullptr;
}

int Report::exit_code() const {
    if (has_red_flag()) return 2;
    if (has_failure()) return 1;
    return 0;
}

namespace {
const char* verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::NotApplicable: return "n/a";
        default: return "skipped";
    }
}
const char* verdict_mark(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "ok";
        case Verdict::Fail: return "FAIL";
        case Verdict::NotApplicable: return "n/a";
        default: return "skip";
    }
}
} // namespace

void Report::render(std::ostream& os, bool witnesses) const {
    (void)witnesses;
    os << "== " << subject << "\n";
    for (const auto& it : items) {
        os << "  " << it.name << ": " << verdict_mark(it.verdict);
        if (it.red_flag && it.verdict == Verdict::Fail) os << " [RED FLAG]";
        if (!it.detail.empty()) os << "  (" << it.detail << ")";
        os << "\n";
    }
    os << "  -- " << (has_red_flag() ? "RED FLAGS PRESENT"
                                     : has_failure() ? "negative classification" : "clean")
       << ", " << elapsed_ms << " ms\n";
}

std::string Report::to_json() const {
    // timing is left out so that reports are byte-identical across runs
    nlohmann::json j;
    j["subject"] = subject;
    j["exit_code"] = exit_code();
    j["items"] = nlohmann::json::array();
    for (const auto& it : items) {
        nlohmann::json e;
        e["name"] = it.name;
        e["verdict"] = verdict_str(it.verdict);
        e["detail"] = it.detail;
        e["red_flag"] = it.red_flag;
        j["items"].push_back(e);
    }
    return j.dump(2);
}

} // namespace oqf
