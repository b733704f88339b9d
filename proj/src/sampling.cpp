#include "macbinom/sampling.hpp"

namespace macbinom {

Rat Sampler::rational() {
    for (;;) {
        long num = static_cast<long>(rng_() % 20001) - 10000;
        if (num == 0) continue;
        long den = 1 + static_cast<long>(rng_() % 10000);
        return Rat(Int(num)) / Rat(Int(den));
    }
}

std::vector<FieldElement> Sampler::point(int n) {
    std::vector<Rat> vals;
    while (static_cast<int>(vals.size()) < n) {
        Rat r = rational();
        bool dup = false;
        for (const Rat& v : vals) dup = dup || v == r;
        if (!dup) vals.push_back(std::move(r));
    }
    std::vector<FieldElement> out;
    out.reserve(n);
    for (Rat& v : vals) out.push_back(FieldElement::from_rat(std::move(v)));
    return out;
}

}  // namespace macbinom
