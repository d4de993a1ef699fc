// Regenerates the golden values file from the reference routes.
#include <iostream>

#include "vacpol/golden.hpp"
#include "vacpol/serialize.hpp"

int main(int argc, char** argv)
{
    if (argc != 2)
    {
        std::cerr << "usage: vacpol-golden OUTPUT.json\n";
        return 1;
    }
    std::vector<vacpol::GoldenEntry> entries;
    for (auto const& id : vacpol::golden_ids())
    {
        entries.push_back(vacpol::golden_reference(id));
        std::cout << id << " = " << vacpol::format_double(entries.back().value) << "\n";
    }
    vacpol::write_atomic(argv[1], vacpol::golden_json(entries));
    return 0;
}
