#ifndef VMR_VMR_HPP
#define VMR_VMR_HPP

#include "vmr/artifacts.hpp"
#include "vmr/config.hpp"
#include "vmr/csv.hpp"
#include "vmr/current.hpp"
#include "vmr/drift.hpp"
#include "vmr/error.hpp"
#include "vmr/svg.hpp"
#include "vmr/sweep.hpp"
#include "vmr/table.hpp"
#include "vmr/types.hpp"
#include "vmr/units.hpp"
#include "vmr/validate.hpp"
#include "vmr/valley.hpp"

#endif  // VMR_VMR_HPP
