//! Modeling toolkit for mini data centres that mix conventional grid-powered
//! servers with self-contained solar-powered modules (server + battery +
//! panel + power-management logic).
//!
//! The crate covers four layers:
//!
//! * [`catalog`] — hardware and location data model, plus a bundled reference
//!   dataset of six processor generations, seven fleet configurations and
//!   four deployment cities.
//! * [`energy`] — closed-form power, daily-energy and compute-capacity laws
//!   for both fleet kinds, including battery feasibility checks.
//! * [`accounting`] — energy, carbon and cost efficiency metrics per fleet
//!   and location.
//! * [`sim`] — a discrete-time simulator for solar harvest, battery state of
//!   charge, load shedding and inter-module energy/workload exchange.
//! * [`planner`] — exhaustive design-space search with Pareto filtering.

pub mod accounting;
pub mod catalog;
pub mod energy;
pub mod planner;
pub mod sim;

pub use accounting::{CostModel, EfficiencyRecord};
pub use catalog::{
    BatterySpec, Catalog, CatalogError, FleetConfig, FleetKind, LocationProfile, ModuleSpec,
    OperatingProfile, PanelSpec, ProcessorModel,
};
pub use energy::{EnergyReport, EvalError};
pub use planner::{DesignSpace, Objective, PlanQuery, PlanResult};
pub use sim::{
    ExchangeMode, ExchangePolicy, HarvestModel, HarvestShape, NodePowerModel, Scenario, SimError,
    SimState, SimTrace,
};
