// Build-time gate: fails when any gate template differs from its target matrix.
#include <iostream>

#include "ctsynth/circuit.hpp"
#include "ctsynth/error.hpp"

int main()
{
    try
    {
        for (const auto &t : ctsynth::build_templates())
            std::cout << "template " << ctsynth::template_name(t.name) << ": " << t.body.size() << " gates, exact\n";
    }
    catch (const ctsynth::Error &e)
    {
        std::cerr << e.what() << '\n';
        return 1;
    }
    return 0;
}
