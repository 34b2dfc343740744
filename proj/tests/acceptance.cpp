#include "liecoh/verify.hpp"

#include <iostream>

int main()
{
    return liecoh::acceptance_main(std::cout);
}
