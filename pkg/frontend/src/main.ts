import { mount } from "./app.js";

const params = new URLSearchParams(window.location.search);
const backend = params.get("backend") ?? "http://127.0.0.1:8080";
mount(backend);
