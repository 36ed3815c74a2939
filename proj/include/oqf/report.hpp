#ifndef OQF_REPORT_HPP
#define OQF_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace oqf {

enum class Verdict { Pass, Fail, NotApplicable, Skipped };

// One check outcome.  A failed red-flag item is a theorem violation: it means
// the implementation (or the input fixture) is inconsistent, never a merely
// negative classification.
struct CheckItem {
    std::string name;
    Verdict verdict = Verdict::Skipped;
    std::string detail;   // witness or reason, element names not ids
    bool red_flag = false;
};

struct Report {
    std::string subject;
    std::vector<CheckItem> items;
    double elapsed_ms = 0.0;

    void add(const std::string& name, bool pass, const std::string& detail = "",
             bool red = false) {
        items.push_back({name, pass ? Verdict::Pass : Verdict::Fail, detail, red});
    }
    void not_applicable(const std::string& name, const std::string& why) {
        items.push_back({name, Verdict::NotApplicable, why, false});
    }
    void skipped(const std::string& name, const std::string& why) {
        items.push_back({name, Verdict::Skipped, why, false});
    }
    void absorb(const Report& other); // append another report's items

    bool has_red_flag() const;
    bool has_failure() const;
    const CheckItem* find(const std::string& name) const;

    // exit-code contract: 0 clean, 1 classification-negative, 2 red flag,
    // 3 is reserved for input errors raised before a report exists
    int exit_code() const;

    void render(std::ostream& os, bool witnesses) const;
    std::string to_json() const;
};

} // namespace oqf

#endif
