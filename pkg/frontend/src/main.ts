import { initApp } from "./app.js";

initApp(window);
