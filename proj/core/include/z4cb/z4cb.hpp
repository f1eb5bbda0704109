#pragma once

#include "z4cb/binary_field.hpp"
#include "z4cb/chain.hpp"
#include "z4cb/closed_form.hpp"
#include "z4cb/codebook.hpp"
#include "z4cb/error.hpp"
#include "z4cb/families.hpp"
#include "z4cb/forms.hpp"
#include "z4cb/galois_ring.hpp"
#include "z4cb/graymap.hpp"
#include "z4cb/rational.hpp"
#include "z4cb/scalars.hpp"
