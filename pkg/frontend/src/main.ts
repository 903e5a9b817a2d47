import { ApiClient } from './api.js';
import { initApp } from './app.js';

const root = document.getElementById('app');
if (root === null) {
  throw new Error('missing #app container');
}
initApp(root, new ApiClient(''));
