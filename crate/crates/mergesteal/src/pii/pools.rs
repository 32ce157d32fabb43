//! Fixed component pools for benchmark generation.
//!
//! Every list is a synthetic fixture shipped with the repository; none of the
//! combinations map to a real person. Pools can be overridden through
//! [`super::GenConfig`], these are the defaults.

pub const OCCUPATIONS: &[&str] = &[
    "Chef", "Barber", "Clerk", "Nurse", "Teacher", "Plumber", "Baker", "Tailor", "Farmer",
    "Painter", "Driver", "Cashier", "Janitor", "Waiter", "Butcher", "Florist", "Jeweler",
    "Mechanic", "Carpenter", "Electrician", "Librarian", "Pharmacist", "Surveyor", "Architect",
    "Engineer", "Analyst", "Auditor", "Designer", "Translator", "Dispatcher",
];

pub const GIVEN_NAMES: &[&str] = &[
    "Aaron", "Jordan", "Sophia", "Liam", "Olivia", "Noah", "Emma", "Ethan", "Ava", "Mason",
    "Isabella", "Logan", "Mia", "Lucas", "Charlotte", "Jackson", "Amelia", "Aiden", "Harper",
    "Caleb", "Evelyn", "Owen", "Abigail", "Henry", "Emily", "Wyatt", "Ella", "Julian", "Scarlett",
    "Levi", "Grace", "Isaac", "Chloe", "Gabriel", "Victoria", "Anthony", "Riley", "Dylan", "Aria",
    "Leo", "Lily", "Miles", "Aubrey", "Adam", "Zoey", "Nathan", "Penelope", "Felix", "Layla",
    "Simon", "Nora", "Oscar", "Hazel", "Elias", "Violet", "Hugo", "Aurora", "Jasper", "Savannah",
    "Silas", "Audrey", "Marcus", "Brooklyn", "Victor", "Bella",
];

pub const SURNAMES: &[&str] = &[
    "Anderson", "Martin", "Davis", "Smith", "Johnson", "Williams", "Brown", "Jones", "Garcia",
    "Miller", "Wilson", "Moore", "Taylor", "Thomas", "Jackson", "White", "Harris", "Sanchez",
    "Clark", "Ramirez", "Lewis", "Robinson", "Walker", "Young", "Allen", "King", "Wright",
    "Scott", "Torres", "Nguyen", "Hill", "Flores", "Green", "Adams", "Nelson", "Baker", "Hall",
    "Rivera", "Campbell", "Mitchell", "Carter", "Roberts", "Gomez", "Phillips", "Evans",
    "Turner", "Diaz", "Parker", "Cruz", "Edwards", "Collins", "Reyes", "Stewart", "Morris",
    "Morales", "Murphy", "Cook", "Rogers", "Gutierrez", "Ortiz", "Morgan", "Cooper", "Peterson",
    "Bailey", "Reed", "Kelly", "Howard", "Ramos", "Kim", "Cox", "Ward", "Richardson", "Watson",
    "Brooks", "Chavez", "Wood", "James", "Bennett", "Gray", "Mendoza", "Ruiz", "Hughes", "Price",
    "Alvarez", "Castillo", "Sanders", "Patel", "Myers", "Long", "Ross", "Foster", "Jimenez",
    "Powell", "Jenkins", "Perry", "Russell", "Sullivan", "Bell", "Coleman", "Butler", "Hendersen",
    "Barnes", "Gonzales", "Fisher", "Vasquez", "Simmons", "Romero", "Jordan", "Patterson",
    "Alexander", "Hamilton", "Graham", "Reynolds", "Griffin", "Wallace", "Moreno", "West",
    "Cole", "Hayes", "Bryant", "Herrera", "Gibson", "Ellis", "Tran", "Medina", "Aguilar",
    "Stevens", "Murray", "Ford", "Castro", "Marshall", "Owens", "Harrison", "Fernandez",
    "Mcdonald", "Woods", "Washington", "Kennedy", "Wells", "Vargas", "Henry", "Chen", "Freeman",
    "Webb", "Tucker", "Guzman", "Burns", "Crawford", "Olson", "Simpson", "Porter", "Hunter",
    "Gordon", "Mendez", "Silva", "Shaw", "Snyder", "Mason", "Dixon", "Munoz", "Hunt", "Hicks",
    "Holmes", "Palmer", "Wagner", "Black", "Robertson", "Boyd", "Rose", "Stone", "Salazar",
    "Fox", "Warren", "Mills", "Meyer", "Rice", "Schmidt", "Garza", "Daniels", "Ferguson",
    "Nichols", "Stephens", "Soto", "Weaver", "Ryan", "Gardner", "Payne", "Grant", "Dunn",
    "Kelley", "Spencer", "Hawkins", "Arnold", "Pierce", "Vazquez", "Hansen", "Peters", "Santos",
    "Hart", "Bradley", "Knight", "Elliott", "Cunningham", "Duncan", "Armstrong", "Hudson",
];

pub const JOB_TITLES: &[&str] = &[
    "Software Engineer", "Product Manager", "Data Scientist", "Sales Associate",
    "Marketing Coordinator", "Customer Support Specialist", "Operations Manager",
    "Financial Analyst", "Graphic Designer", "Project Manager", "Account Executive",
    "Research Assistant", "Office Administrator", "Quality Inspector", "Logistics Planner",
    "Technical Writer", "Systems Administrator", "Business Analyst", "Purchasing Agent",
    "Legal Assistant", "Laboratory Technician", "Field Supervisor", "Compliance Officer",
    "Recruiter", "Payroll Specialist", "Maintenance Supervisor", "Warehouse Manager",
    "Executive Assistant", "Regional Director", "Training Coordinator", "Claims Adjuster",
    "Editor", "Photographer", "Dental Hygienist", "Paralegal", "Estimator", "Bookkeeper",
    "Store Manager", "Safety Inspector", "Production Scheduler",
];

pub const STREET_NAMES: &[&str] = &[
    "Oak", "Pine", "Maple", "Cedar", "Elm", "Willow", "Birch", "Walnut", "Chestnut", "Spruce",
    "Aspen", "Magnolia", "Juniper", "Sycamore", "Poplar", "Laurel", "Hickory", "Dogwood",
    "Hawthorn", "Cypress", "Alder", "Beech", "Holly", "Ivy", "Rose", "Tulip", "Violet", "Jasmine",
    "Meadow", "Ridge", "Valley", "Summit", "Lake", "River", "Brook", "Spring", "Sunset",
    "Sunrise", "Highland", "Prairie", "Orchard", "Garden", "Park", "Forest", "Canyon", "Harbor",
    "Bridge", "Mill", "Church", "Franklin",
];

// USPS-style street suffixes.
pub const STREET_TYPES: &[&str] = &[
    "Street", "Avenue", "Road", "Court", "Lane", "Drive", "Boulevard", "Way", "Place", "Terrace",
    "Circle", "Trail", "Parkway", "Alley", "Crossing", "Square",
];

pub const CITIES: &[&str] = &[
    "Dallas", "Chicago", "Phoenix", "Houston", "Denver", "Seattle", "Portland", "Austin",
    "Boston", "Atlanta", "Miami", "Orlando", "Tampa", "Nashville", "Memphis", "Charlotte",
    "Raleigh", "Richmond", "Baltimore", "Pittsburgh", "Cleveland", "Columbus", "Detroit",
    "Milwaukee", "Minneapolis", "Omaha", "Tulsa", "Wichita", "Fresno", "Sacramento", "Tucson",
    "Albuquerque", "Boise", "Spokane", "Reno", "Anchorage", "Honolulu", "Louisville",
    "Indianapolis", "Cincinnati", "Lexington", "Greensboro", "Norfolk", "Chesapeake", "Arlington",
    "Plano", "Laredo", "Lubbock", "Garland", "Irving",
];

pub const EMAIL_DOMAINS: &[&str] = &["gmail.com", "outlook.com", "icloud.com", "yahoo.com"];
